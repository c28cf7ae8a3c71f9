// textpol: detect text polarity in grayscale document images, binarize them,
// export gamma-sweep curves, and generate synthetic two-mode test images.
//
// Exit codes: 0 success, 1 usage error, 2 processing error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polarity/errors.hpp"
#include "polarity/imageio.hpp"
#include "polarity/otsu.hpp"
#include "polarity/sweep.hpp"
#include "polarity/synth.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_gamma_list(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string cell =
            text.substr(start, comma == std::string::npos ? comma : comma - start);
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0') {
            throw std::invalid_argument("cannot parse gamma value \"" + cell + "\"");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// Reject bad grids before any file is touched, so grid mistakes are usage
// errors rather than processing errors.
void validate_gamma_list(const std::vector<double>& gammas) {
    if (gammas.size() < 3) {
        throw std::invalid_argument("gamma grid needs at least 3 points");
    }
    if (gammas[0] != 1.0) {
        throw std::invalid_argument("gamma grid must start at 1.0");
    }
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        if (!(gammas[i] > gammas[i - 1])) {
            throw std::invalid_argument("gamma grid must be strictly increasing");
        }
    }
}

struct DetectOptions {
    std::string input;
    std::string gammas_text;
    std::string csv_path;
    double trend_threshold = polarity::kDefaultTrendThreshold;
    polarity::ConditionConfig conditions;
    bool as_json = false;
    bool no_parallel = false;
};

void add_condition_options(CLI::App* cmd, polarity::ConditionConfig& cfg) {
    cmd->add_option("--balance-tol", cfg.balance_tol,
                    "Max |w1 - w2| still considered balanced");
    cmd->add_option("--epsilon", cfg.epsilon,
                    "Case I: normalized class-mean gap must be below this");
    cmd->add_option("--delta", cfg.delta,
                    "Case II: normalized class-mean gap must exceed this");
    cmd->add_option("--t-low", cfg.t_low,
                    "Case I: normalized threshold must be at or below this");
    cmd->add_option("--t-high", cfg.t_high,
                    "Case II: normalized threshold must be at or above this");
}

polarity::DetectConfig build_detect_config(const DetectOptions& opt) {
    polarity::DetectConfig cfg;
    if (!opt.gammas_text.empty()) {
        cfg.gammas = parse_gamma_list(opt.gammas_text);
        validate_gamma_list(cfg.gammas);
    }
    if (!(opt.trend_threshold > 0.5) || opt.trend_threshold > 1.0) {
        throw std::invalid_argument("--trend-threshold must be in (0.5, 1]");
    }
    cfg.trend_threshold = opt.trend_threshold;
    cfg.conditions = opt.conditions;
    cfg.conditions.validate();
    cfg.parallel = !opt.no_parallel;
    return cfg;
}

json curve_to_json(const polarity::GammaCurve& curve) {
    json arr = json::array();
    for (const auto& s : curve.samples) {
        arr.push_back({{"gamma", s.gamma}, {"power", s.power}, {"mbcv", s.mbcv}});
    }
    return arr;
}

json report_to_json(const polarity::PolarityReport& rep,
                    const polarity::DetectConfig& cfg) {
    return json{
        {"polarity", polarity::to_string(rep.polarity)},
        {"trend", polarity::to_string(rep.trend)},
        {"monotone_fraction", rep.monotone_fraction},
        {"base",
         {{"t_star", rep.base.t_star},
          {"mbcv", rep.base.mbcv},
          {"mu_T", rep.base.mu_T},
          {"w1", rep.base.stats.w1},
          {"w2", rep.base.stats.w2},
          {"mu1", rep.base.stats.mu1},
          {"mu2", rep.base.stats.mu2}}},
        {"conditions",
         {{"w1", rep.conditions.w1},
          {"w2", rep.conditions.w2},
          {"t_star_norm", rep.conditions.t_star_norm},
          {"mean_gap_norm", rep.conditions.mean_gap_norm},
          {"balanced", rep.conditions.balanced},
          {"case_i", rep.conditions.case_i},
          {"case_ii", rep.conditions.case_ii}}},
        {"config",
         {{"trend_threshold", cfg.trend_threshold},
          {"balance_tol", cfg.conditions.balance_tol},
          {"epsilon", cfg.conditions.epsilon},
          {"delta", cfg.conditions.delta},
          {"t_low", cfg.conditions.t_low},
          {"t_high", cfg.conditions.t_high}}},
        {"curve", curve_to_json(rep.curve)},
    };
}

void print_report(const polarity::PolarityReport& rep,
                  const polarity::DetectConfig& cfg) {
    std::cout << "polarity: " << polarity::to_string(rep.polarity) << '\n'
              << "trend: " << polarity::to_string(rep.trend) << '\n'
              << "monotone_fraction: " << fmt(rep.monotone_fraction) << '\n'
              << "t_star: " << rep.base.t_star << '\n'
              << "mbcv: " << fmt(rep.base.mbcv) << '\n'
              << "w1: " << fmt(rep.conditions.w1) << '\n'
              << "w2: " << fmt(rep.conditions.w2) << '\n'
              << "t_star_norm: " << fmt(rep.conditions.t_star_norm) << '\n'
              << "mean_gap_norm: " << fmt(rep.conditions.mean_gap_norm) << '\n'
              << "balanced: " << (rep.conditions.balanced ? "true" : "false") << '\n'
              << "case_i: " << (rep.conditions.case_i ? "true" : "false") << '\n'
              << "case_ii: " << (rep.conditions.case_ii ? "true" : "false") << '\n';
    // The cutoffs are tunable choices, not measurements; echo them so a run
    // can be interpreted without knowing the invocation.
    std::cout << "config: trend_threshold=" << fmt(cfg.trend_threshold)
              << " balance_tol=" << fmt(cfg.conditions.balance_tol)
              << " epsilon=" << fmt(cfg.conditions.epsilon)
              << " delta=" << fmt(cfg.conditions.delta)
              << " t_low=" << fmt(cfg.conditions.t_low)
              << " t_high=" << fmt(cfg.conditions.t_high) << '\n';
}

int run_polarity(const DetectOptions& opt) {
    const polarity::DetectConfig cfg = build_detect_config(opt);
    const polarity::GrayImage img = polarity::read_gray(opt.input);
    const polarity::PolarityReport rep = polarity::detect_polarity(img, cfg);
    if (!opt.csv_path.empty()) {
        polarity::write_curve_csv(rep.curve, opt.csv_path);
    }
    if (opt.as_json) {
        std::cout << report_to_json(rep, cfg).dump(2) << '\n';
    } else {
        print_report(rep, cfg);
    }
    return 0;
}

int run_sweep(const DetectOptions& opt) {
    const polarity::DetectConfig cfg = build_detect_config(opt);
    const std::vector<double> grid =
        cfg.gammas.empty() ? polarity::default_gamma_grid() : cfg.gammas;
    const polarity::GrayImage img = polarity::read_gray(opt.input);
    const polarity::Histogram hist = polarity::build_histogram(img);
    const polarity::GammaCurve curve =
        polarity::sweep_mbcv(hist, grid, cfg.parallel);
    if (!opt.csv_path.empty()) {
        polarity::write_curve_csv(curve, opt.csv_path);
    }
    if (opt.as_json) {
        std::cout << json{{"curve", curve_to_json(curve)}}.dump(2) << '\n';
    } else {
        std::cout << "gamma,power,mbcv\n";
        for (const auto& s : curve.samples) {
            std::cout << fmt(s.gamma) << ',' << fmt(s.power) << ','
                      << fmt(s.mbcv) << '\n';
        }
    }
    return 0;
}

struct BinarizeOptions {
    std::string input;
    std::string output;
    std::optional<int> threshold;
    bool invert = false;
    bool as_json = false;
};

int run_binarize(const BinarizeOptions& opt) {
    const polarity::GrayImage img = polarity::read_gray(opt.input);
    int t = 0;
    if (opt.threshold) {
        t = *opt.threshold;
        if (t < 0 || t > polarity::kMaxThreshold) {
            throw std::invalid_argument("--threshold must be in [0, 254]");
        }
    } else {
        t = polarity::otsu_threshold(polarity::build_histogram(img)).t_star;
    }
    const polarity::BinaryImage out = polarity::binarize(img, t, opt.invert);
    polarity::write_binary(out, opt.output);
    if (opt.as_json) {
        std::cout << json{{"threshold", t}, {"output", opt.output}}.dump(2) << '\n';
    } else {
        std::cout << "threshold: " << t << '\n';
    }
    return 0;
}

struct SynthOptions {
    std::string output;
    std::string preset;
    polarity::SynthSpec spec;
};

// Shortest decimal that parses back to the same double; keeps the sidecar
// readable without losing precision.
std::string fmt_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_sidecar(const polarity::SynthSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw polarity::io_error("cannot open " + path + " for writing");
    }
    out << "width=" << spec.width << '\n'
        << "height=" << spec.height << '\n'
        << "mode1_mean=" << fmt_shortest(spec.mode1_mean) << '\n'
        << "mode1_std=" << fmt_shortest(spec.mode1_std) << '\n'
        << "mode2_mean=" << fmt_shortest(spec.mode2_mean) << '\n'
        << "mode2_std=" << fmt_shortest(spec.mode2_std) << '\n'
        << "weight1=" << fmt_shortest(spec.weight1) << '\n'
        << "seed=" << spec.seed << '\n';
    if (!out.flush()) {
        throw polarity::io_error("failed writing " + path);
    }
}

int run_synth(const SynthOptions& opt, const CLI::App* cmd) {
    polarity::SynthSpec spec = opt.spec;
    if (!opt.preset.empty()) {
        polarity::SynthSpec base;
        if (opt.preset == "case_i") {
            base = polarity::case_i_spec(opt.spec.seed);
        } else if (opt.preset == "case_ii") {
            base = polarity::case_ii_spec(opt.spec.seed);
        } else if (opt.preset == "unimodal") {
            base = polarity::unimodal_spec(opt.spec.seed);
        } else {
            throw std::invalid_argument("unknown preset \"" + opt.preset +
                                        "\" (case_i, case_ii, unimodal)");
        }
        // Explicit flags override the preset's values.
        if (!cmd->count("--width")) spec.width = base.width;
        if (!cmd->count("--height")) spec.height = base.height;
        if (!cmd->count("--mode1-mean")) spec.mode1_mean = base.mode1_mean;
        if (!cmd->count("--mode1-std")) spec.mode1_std = base.mode1_std;
        if (!cmd->count("--mode2-mean")) spec.mode2_mean = base.mode2_mean;
        if (!cmd->count("--mode2-std")) spec.mode2_std = base.mode2_std;
        if (!cmd->count("--weight1")) spec.weight1 = base.weight1;
    }
    spec.validate();
    const polarity::GrayImage img = polarity::generate(spec);
    polarity::write_gray(img, opt.output);
    write_sidecar(spec, opt.output + ".spec");
    std::cout << "wrote " << opt.output << " and " << opt.output << ".spec\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Text polarity detection via gamma sweeps of Otsu's "
                 "between-class variance"};
    app.require_subcommand(1);

    DetectOptions det;
    CLI::App* pol = app.add_subcommand(
        "polarity", "Detect whether text is bright-on-dark or dark-on-bright");
    pol->add_option("input", det.input, "Input PGM/PPM image")->required();
    pol->add_option("--gammas", det.gammas_text,
                    "Comma-separated gamma grid (starts at 1.0, increasing)");
    pol->add_option("--trend-threshold", det.trend_threshold,
                    "Monotone fraction needed to call a trend");
    pol->add_option("--csv", det.csv_path, "Also write the sweep curve as CSV");
    pol->add_flag("--json", det.as_json, "Emit the full report as JSON");
    pol->add_flag("--no-parallel", det.no_parallel,
                  "Evaluate the sweep sequentially");
    add_condition_options(pol, det.conditions);

    DetectOptions swp;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Print the mbcv-vs-gamma curve for an image");
    sweep->add_option("input", swp.input, "Input PGM/PPM image")->required();
    sweep->add_option("--gammas", swp.gammas_text,
                      "Comma-separated gamma grid (starts at 1.0, increasing)");
    sweep->add_option("--csv", swp.csv_path, "Write the curve as CSV");
    sweep->add_flag("--json", swp.as_json, "Emit the curve as JSON");
    sweep->add_flag("--no-parallel", swp.no_parallel,
                    "Evaluate the sweep sequentially");

    BinarizeOptions bin;
    CLI::App* binarize = app.add_subcommand(
        "binarize", "Threshold an image to a binary PGM");
    binarize->add_option("input", bin.input, "Input PGM/PPM image")->required();
    binarize->add_option("output", bin.output, "Output binary PGM")->required();
    int threshold_value = -1;
    CLI::Option* threshold_opt = binarize->add_option(
        "--threshold", threshold_value,
        "Fixed threshold in [0, 254]; default is Otsu's threshold");
    binarize->add_flag("--invert", bin.invert,
                       "Map low levels to 255 and high levels to 0");
    binarize->add_flag("--json", bin.as_json, "Emit the result as JSON");

    SynthOptions syn;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a two-mode Gaussian-mixture test image");
    synth->add_option("output", syn.output, "Output PGM path")->required();
    synth->add_option("--preset", syn.preset,
                      "Parameter preset: case_i, case_ii, or unimodal");
    synth->add_option("--width", syn.spec.width, "Image width");
    synth->add_option("--height", syn.spec.height, "Image height");
    synth->add_option("--mode1-mean", syn.spec.mode1_mean,
                      "Mode 1 mean in [0, 1]");
    synth->add_option("--mode1-std", syn.spec.mode1_std,
                      "Mode 1 standard deviation");
    synth->add_option("--mode2-mean", syn.spec.mode2_mean,
                      "Mode 2 mean in [0, 1]");
    synth->add_option("--mode2-std", syn.spec.mode2_std,
                      "Mode 2 standard deviation");
    synth->add_option("--weight1", syn.spec.weight1,
                      "Probability of drawing from mode 1");
    synth->add_option("--seed", syn.spec.seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (pol->parsed()) {
            return run_polarity(det);
        }
        if (sweep->parsed()) {
            return run_sweep(swp);
        }
        if (binarize->parsed()) {
            if (threshold_opt->count() > 0) {
                bin.threshold = threshold_value;
            }
            return run_binarize(bin);
        }
        if (synth->parsed()) {
            return run_synth(syn, synth);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
