// End-to-end checks of the textpol binary: argument handling, exit codes,
// and output formats. The binary path comes in through TEXTPOL_BIN.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "polarity/imageio.hpp"
#include "polarity/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

fs::path work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "textpol_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out_path = work_dir() / "stdout.txt";
    const fs::path err_path = work_dir() / "stderr.txt";
    const std::string cmd = std::string(TEXTPOL_BIN) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

// A bright-on-dark test image shared by several cases.
fs::path case_i_image() {
    static const fs::path path = [] {
        const fs::path p = work_dir() / "case_i.pgm";
        const RunResult r =
            run("synth " + p.string() + " --preset case_i --seed 42");
        REQUIRE(r.exit_code == 0);
        return p;
    }();
    return path;
}

} // namespace

TEST_CASE("polarity reports bright text on a dark background") {
    const RunResult r = run("polarity " + case_i_image().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("polarity: BrightOnDark") != std::string::npos);
    CHECK(r.out.find("trend: Increasing") != std::string::npos);
    CHECK(r.out.find("monotone_fraction: 1") != std::string::npos);
    CHECK(r.out.find("case_i: true") != std::string::npos);
    // The tunable cutoffs appear in the output.
    CHECK(r.out.find("trend_threshold=") != std::string::npos);
    CHECK(r.out.find("balance_tol=") != std::string::npos);
}

TEST_CASE("polarity --json carries the full report") {
    const RunResult r = run("polarity " + case_i_image().string() + " --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["polarity"] == "BrightOnDark");
    CHECK(doc["trend"] == "Increasing");
    CHECK(doc["monotone_fraction"] == 1.0);
    CHECK(doc["conditions"]["case_i"] == true);
    CHECK(doc["conditions"]["case_ii"] == false);
    CHECK(doc["config"]["trend_threshold"] == 0.9);
    CHECK(doc["curve"].size() == 9);
    CHECK(doc["curve"][0]["gamma"] == 1.0);
    // Full-precision doubles survive the JSON round trip.
    CHECK(doc["base"]["mbcv"].get<double>() ==
          doc["curve"][0]["mbcv"].get<double>());
}

TEST_CASE("inverted input flips the reported polarity") {
    const polarity::GrayImage img = polarity::read_gray(case_i_image().string());
    const fs::path inv_path = work_dir() / "case_i_inverted.pgm";
    polarity::write_gray(polarity::invert(img), inv_path.string());
    const RunResult r = run("polarity " + inv_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("polarity: DarkOnBright") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run("").exit_code == 1);                      // no subcommand
    CHECK(run("frobnicate x.pgm").exit_code == 1);      // unknown subcommand
    CHECK(run("polarity").exit_code == 1);              // missing argument
    CHECK(run("polarity x.pgm --wat").exit_code == 1);  // unknown option
    const std::string img = case_i_image().string();
    // Bad gamma grids are usage errors, not processing errors.
    CHECK(run("polarity " + img + " --gammas 1,0.5,2").exit_code == 1);
    CHECK(run("polarity " + img + " --gammas 2,3,4").exit_code == 1);
    CHECK(run("polarity " + img + " --gammas 1,2").exit_code == 1);
    CHECK(run("polarity " + img + " --gammas 1,2,x").exit_code == 1);
    CHECK(run("polarity " + img + " --trend-threshold 0.4").exit_code == 1);
    CHECK(run("binarize " + img + " out.pgm --threshold 300").exit_code == 1);
}

TEST_CASE("--help exits cleanly") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("polarity --help").exit_code == 0);
}

TEST_CASE("processing failures exit with 2") {
    const RunResult missing = run("polarity /nonexistent/input.pgm");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);

    // A constant image has no second histogram bin to split.
    const fs::path flat = work_dir() / "flat.pgm";
    REQUIRE(run("synth " + flat.string() +
                " --mode1-mean 0.5 --mode1-std 0 --mode2-mean 0.5"
                " --mode2-std 0 --weight1 1 --seed 1")
                .exit_code == 0);
    const RunResult degenerate = run("polarity " + flat.string());
    CHECK(degenerate.exit_code == 2);
    CHECK(degenerate.err.find("degenerate histogram") != std::string::npos);
}

TEST_CASE("binarize writes a two-level PGM") {
    const fs::path out = work_dir() / "binarized.pgm";
    const RunResult r =
        run("binarize " + case_i_image().string() + " " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("threshold:") != std::string::npos);
    const polarity::GrayImage img = polarity::read_gray(out.string());
    for (std::uint8_t v : img.pixels) {
        CHECK((v == 0 || v == 255));
    }

    // A fixed threshold with inversion flips which side goes white.
    const fs::path inv = work_dir() / "binarized_inv.pgm";
    REQUIRE(run("binarize " + case_i_image().string() + " " + inv.string() +
                " --threshold 23 --invert")
                .exit_code == 0);
    const polarity::GrayImage inv_img = polarity::read_gray(inv.string());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        CHECK(img.pixels[i] == 255 - inv_img.pixels[i]);
    }
}

TEST_CASE("sweep --csv matches an in-process sweep") {
    const fs::path csv = work_dir() / "curve.csv";
    const RunResult r = run("sweep " + case_i_image().string() + " --csv " +
                            csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("gamma,power,mbcv\n", 0) == 0);

    const polarity::GrayImage img = polarity::read_gray(case_i_image().string());
    const polarity::GammaCurve direct = polarity::sweep_mbcv(
        polarity::build_histogram(img), polarity::default_gamma_grid());
    const polarity::GammaCurve parsed = polarity::read_curve_csv(csv.string());
    REQUIRE(parsed.samples.size() == direct.samples.size());
    for (std::size_t i = 0; i < direct.samples.size(); ++i) {
        CHECK(parsed.samples[i].gamma == direct.samples[i].gamma);
        CHECK(parsed.samples[i].power == direct.samples[i].power);
        CHECK(parsed.samples[i].mbcv == direct.samples[i].mbcv);
    }
}

TEST_CASE("synth writes the image and a sidecar with its parameters") {
    const fs::path out = work_dir() / "synthetic.pgm";
    const RunResult r = run("synth " + out.string() +
                            " --preset case_ii --seed 7 --width 64 --height 32");
    CHECK(r.exit_code == 0);
    const polarity::GrayImage img = polarity::read_gray(out.string());
    CHECK(img.width == 64);
    CHECK(img.height == 32);

    const std::string sidecar = slurp(out.string() + ".spec");
    CHECK(sidecar.find("width=64\n") != std::string::npos);
    CHECK(sidecar.find("height=32\n") != std::string::npos);
    CHECK(sidecar.find("mode2_mean=0.95") != std::string::npos);
    CHECK(sidecar.find("weight1=0.5\n") != std::string::npos);
    CHECK(sidecar.find("seed=7\n") != std::string::npos);
}

TEST_CASE("sequential execution produces identical output") {
    const std::string img = case_i_image().string();
    const RunResult parallel = run("polarity " + img);
    const fs::path out_path = work_dir() / "stdout.txt";
    const std::string cmd = "POLARITY_NO_PARALLEL=1 " + std::string(TEXTPOL_BIN) +
                            " polarity " + img + " > " + out_path.string() +
                            " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    CHECK(WIFEXITED(raw));
    CHECK(WEXITSTATUS(raw) == 0);
    CHECK(slurp(out_path) == parallel.out);

    const RunResult flagged = run("polarity " + img + " --no-parallel");
    CHECK(flagged.exit_code == 0);
    CHECK(flagged.out == parallel.out);
}
