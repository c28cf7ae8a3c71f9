#include <stdexcept>

#include "doctest.h"
#include "polarity/histogram.hpp"
#include "support.hpp"

using namespace polarity;

TEST_CASE("build_histogram counts every pixel") {
    GrayImage img{3, 2, {0, 0, 7, 255, 7, 7}};
    const Histogram h = build_histogram(img);
    CHECK(h.total == 6);
    CHECK(h.counts[0] == 2);
    CHECK(h.counts[7] == 3);
    CHECK(h.counts[255] == 1);
    CHECK(h.counts[1] == 0);
    CHECK(h.probabilities[7] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.occupied_bins() == 3);
}

TEST_CASE("build_histogram rejects an empty image") {
    GrayImage img{0, 0, {}};
    CHECK_THROWS_AS(build_histogram(img), std::invalid_argument);
}

TEST_CASE("from_counts rejects all-zero counts") {
    std::array<std::uint64_t, kLevels> counts{};
    CHECK_THROWS_AS(from_counts(counts), std::invalid_argument);
}

TEST_CASE("from_counts normalizes to probabilities summing to 1") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Histogram h = testsupport::random_histogram(seed);
        double sum = 0.0;
        std::uint64_t total = 0;
        for (int i = 0; i < kLevels; ++i) {
            sum += h.probabilities[i];
            total += h.counts[i];
        }
        CHECK(total == h.total);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}
