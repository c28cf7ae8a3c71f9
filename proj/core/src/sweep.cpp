#include "polarity/sweep.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polarity/errors.hpp"
#include "polarity/powerlaw.hpp"

namespace polarity {

std::string to_string(Trend t) {
    switch (t) {
        case Trend::Increasing: return "Increasing";
        case Trend::Decreasing: return "Decreasing";
        case Trend::Fluctuating: return "Fluctuating";
    }
    return "Fluctuating";
}

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::BrightOnDark: return "BrightOnDark";
        case Polarity::DarkOnBright: return "DarkOnBright";
        case Polarity::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

std::vector<double> default_gamma_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) {
        grid.push_back(1.0 + 0.5 * i);
    }
    return grid;
}

namespace {

void validate_grid(std::span<const double> gammas) {
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

GammaSample evaluate_point(const Histogram& h, double gamma) {
    const Gamma g(gamma);
    GammaSample s;
    s.gamma = gamma;
    s.power = g.power();
    const Histogram transformed = transform_histogram(h, g);
    // An extreme transform can merge every occupied level into one bin;
    // that point carries no class separation at all.
    if (transformed.occupied_bins() < 2) {
        s.mbcv = 0.0;
    } else {
        s.mbcv = otsu_threshold(transformed).mbcv;
    }
    return s;
}

bool parallel_disabled_by_env() {
    const char* v = std::getenv("POLARITY_NO_PARALLEL");
    return v != nullptr && std::strcmp(v, "1") == 0;
}

} // namespace

GammaCurve sweep_mbcv(const Histogram& h, std::span<const double> gammas,
                      bool parallel) {
    validate_grid(gammas);
    if (h.occupied_bins() < 2) {
        throw degenerate_histogram_error(
            "degenerate histogram: fewer than two occupied bins, "
            "sweep cannot measure class separation");
    }

    GammaCurve curve;
    curve.samples.resize(gammas.size());

    const unsigned hw = std::thread::hardware_concurrency();
    const bool run_parallel = parallel && !parallel_disabled_by_env() &&
                              hw > 1 && gammas.size() > 1;
    if (run_parallel) {
        const std::size_t n_workers =
            std::min<std::size_t>(hw, gammas.size());
        std::vector<std::future<void>> futures;
        futures.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < gammas.size(); i += n_workers) {
                    curve.samples[i] = evaluate_point(h, gammas[i]);
                }
            }));
        }
        for (auto& f : futures) {
            f.get();
        }
    } else {
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            curve.samples[i] = evaluate_point(h, gammas[i]);
        }
    }

    curve.base_mbcv = curve.samples.front().mbcv;
    return curve;
}

double monotone_fraction(const GammaCurve& curve) {
    const auto& s = curve.samples;
    if (s.size() < 2) {
        throw std::invalid_argument("curve needs at least 2 samples");
    }
    int rising = 0, falling = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i + 1].mbcv > s[i].mbcv) {
            ++rising;
        } else if (s[i + 1].mbcv < s[i].mbcv) {
            ++falling;
        }
    }
    const int pairs = static_cast<int>(s.size()) - 1;
    return static_cast<double>(std::max(rising, falling)) / pairs;
}

Trend classify_trend(const GammaCurve& curve, double threshold) {
    if (!(threshold > 0.5) || threshold > 1.0) {
        throw std::invalid_argument("trend threshold must be in (0.5, 1]");
    }
    const auto& s = curve.samples;
    const double frac = monotone_fraction(curve);
    if (frac < threshold) {
        return Trend::Fluctuating;
    }
    int rising = 0, falling = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i + 1].mbcv > s[i].mbcv) {
            ++rising;
        } else if (s[i + 1].mbcv < s[i].mbcv) {
            ++falling;
        }
    }
    return rising >= falling ? Trend::Increasing : Trend::Decreasing;
}

PolarityReport detect_polarity(const Histogram& h, const DetectConfig& cfg) {
    cfg.conditions.validate();
    const std::vector<double> grid =
        cfg.gammas.empty() ? default_gamma_grid() : cfg.gammas;

    PolarityReport rep;
    rep.base = otsu_threshold(h);
    rep.curve = sweep_mbcv(h, grid, cfg.parallel);
    rep.monotone_fraction = monotone_fraction(rep.curve);
    rep.trend = classify_trend(rep.curve, cfg.trend_threshold);
    switch (rep.trend) {
        case Trend::Increasing: rep.polarity = Polarity::BrightOnDark; break;
        case Trend::Decreasing: rep.polarity = Polarity::DarkOnBright; break;
        case Trend::Fluctuating: rep.polarity = Polarity::Indeterminate; break;
    }
    rep.conditions = check_conditions(rep.base, cfg.conditions);
    return rep;
}

PolarityReport detect_polarity(const GrayImage& img, const DetectConfig& cfg) {
    return detect_polarity(build_histogram(img), cfg);
}

namespace {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_curve_csv(const GammaCurve& curve, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open " + path + " for writing");
    }
    out << "gamma,power,mbcv\n";
    for (const auto& s : curve.samples) {
        out << format_full(s.gamma) << ',' << format_full(s.power) << ','
            << format_full(s.mbcv) << '\n';
    }
    if (!out.flush()) {
        throw io_error("failed writing " + path);
    }
}

GammaCurve read_curve_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path + " for reading");
    }
    std::string line;
    std::size_t offset = 0;
    if (!std::getline(in, line)) {
        throw format_error("empty curve file", 0);
    }
    if (line == "gamma,power,mbcv\r") {
        line.pop_back();
    }
    if (line != "gamma,power,mbcv") {
        throw format_error("expected header \"gamma,power,mbcv\"", 0);
    }
    offset += line.size() + 1;

    GammaCurve curve;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            offset += 1;
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        double values[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(fields, cell, ',')) {
                throw format_error("curve row needs 3 comma-separated values", offset);
            }
            char* end = nullptr;
            values[i] = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                throw format_error("cannot parse number \"" + cell + "\"", offset);
            }
        }
        if (std::getline(fields, cell, ',')) {
            throw format_error("curve row has more than 3 values", offset);
        }
        curve.samples.push_back({values[0], values[1], values[2]});
        offset += line.size() + 1;
    }
    if (curve.samples.empty()) {
        throw format_error("curve file has no data rows", offset);
    }
    curve.base_mbcv = curve.samples.front().mbcv;
    return curve;
}

} // namespace polarity
