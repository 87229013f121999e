#include <doctest.h>

#include "pupils/blink.hpp"
#include "pupils/error.hpp"
#include "synth.hpp"

#include <random>

using namespace pupils;
using namespace pupils::testing;

namespace {

const double NaN = kMissing;

bool bounds_equal(const Spans& spans, const std::vector<std::pair<std::size_t, std::size_t>>& expected) {
    if (spans.size() != expected.size()) return false;
    for (std::size_t i = 0; i < spans.size(); ++i)
        if (spans[i].start != expected[i].first || spans[i].end != expected[i].second) return false;
    return true;
}

}  // namespace

TEST_CASE("missing runs") {
    CHECK(bounds_equal(detect_missing(std::vector<double>{4, 4, NaN, NaN, 4}, 500), {{2, 4}}));
    CHECK(detect_missing(std::vector<double>{4, 4, 4}, 500).empty());
    CHECK(bounds_equal(detect_missing(std::vector<double>{NaN, 4, NaN}, 500), {{0, 1}, {2, 3}}));
    CHECK(bounds_equal(detect_missing(std::vector<double>{4, 0, 0, 4, 0}, 500), {{1, 3}, {4, 5}}));
    const auto spans = detect_missing(std::vector<double>{4, NaN, NaN, 4}, 100);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].kind == EventKind::Missing);
    CHECK(spans[0].duration == doctest::Approx(0.02));
}

TEST_CASE("blink threshold") {
    CHECK(blink_threshold(std::vector<double>(50, 5.0)) == 5.0);
    // mean 5, sample sd sqrt(2)
    CHECK(blink_threshold(std::vector<double>{4, 6}) == doctest::Approx(5.0 - 3.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(blink_threshold(std::vector<double>{4, 6}) == doctest::Approx(0.757359).epsilon(1e-6));
    CHECK(blink_threshold(std::vector<double>{4, 6}, 1.0) == doctest::Approx(5.0 - std::sqrt(2.0)));

    const std::vector<double> with_gaps{3.0, NaN, 4.5, 0.0, 5.25, NaN, 6.0, 4.0};
    const std::vector<double> without{3.0, 4.5, 5.25, 6.0, 4.0};
    CHECK(blink_threshold(with_gaps) == blink_threshold(without));

    CHECK_THROWS_AS(blink_threshold(std::vector<double>{4.0, NaN, 0.0}), Error);
    try {
        blink_threshold(std::vector<double>{NaN});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientValidData);
    }
}

TEST_CASE("constant recording has no blinks") {
    CHECK(detect_blinks(std::vector<double>(1000, 5.0), options(500)).empty());
}

TEST_CASE("a 100 ms dip at 500 Hz is one blink") {
    std::vector<double> pupil(1000, 5.0);
    for (std::size_t i = 400; i < 450; ++i) pupil[i] = 0.5;

    // Oracle: mean/sd recomputed from the definition, including the dip.
    double mean = 0;
    for (double v : pupil) mean += v;
    mean /= 1000.0;
    double ss = 0;
    for (double v : pupil) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / 999.0);
    REQUIRE(0.5 < mean - 3 * sd);
    REQUIRE(5.0 > mean - 3 * sd);

    const auto blinks = detect_blinks(pupil, options(500));
    REQUIRE(bounds_equal(blinks, {{400, 450}}));
    CHECK(blinks[0].kind == EventKind::Blink);
    CHECK(blinks[0].duration == doctest::Approx(0.1));
}

TEST_CASE("minimum duration filters single-sample glitches at 60 Hz") {
    std::vector<double> pupil(600, 5.0);
    pupil[300] = 0.5;  // 1000/60 = 16.7 ms < 30 ms
    CHECK(detect_blinks(pupil, options(60)).empty());
    pupil[301] = 0.5;  // two samples: 33.3 ms >= 30 ms
    CHECK(bounds_equal(detect_blinks(pupil, options(60)), {{300, 302}}));
}

TEST_CASE("missing samples touching a dip join the blink; isolated gaps do not") {
    std::vector<double> pupil(2000, 5.0);
    for (std::size_t i = 500; i < 520; ++i) pupil[i] = 1.0;   // sub-threshold edge
    for (std::size_t i = 520; i < 560; ++i) pupil[i] = 0.0;   // dropout
    for (std::size_t i = 560; i < 570; ++i) pupil[i] = 1.2;   // sub-threshold edge
    for (std::size_t i = 1200; i < 1300; ++i) pupil[i] = NaN; // plain gap
    const auto blinks = detect_blinks(pupil, options(500));
    CHECK(bounds_equal(blinks, {{500, 570}}));
    CHECK(bounds_equal(detect_missing(pupil, 500), {{520, 560}, {1200, 1300}}));
}

TEST_CASE("property: blink spans are invariant to positive scaling and offsets") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0, 1);
    std::normal_distribution<double> noise(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 300 + static_cast<std::size_t>(unit(rng) * 2000);
        const double fs = unit(rng) < 0.5 ? 60.0 : 500.0;
        std::vector<double> pupil(n);
        const double base = 3 + 4 * unit(rng);
        for (auto& v : pupil) v = base + 0.05 * noise(rng);
        const int dips = static_cast<int>(unit(rng) * 4);
        for (int d = 0; d < dips; ++d) {
            const auto s = static_cast<std::size_t>(unit(rng) * (n - 40));
            const auto len = 1 + static_cast<std::size_t>(unit(rng) * 35);
            const double level = base * (0.2 + 0.5 * unit(rng));
            for (std::size_t i = s; i < s + len; ++i) pupil[i] = unit(rng) < 0.2 ? NaN : level;
        }
        auto opts = options(fs);
        const auto reference = detect_blinks(pupil, opts);

        const double c = 0.01 + 50 * unit(rng);
        std::vector<double> scaled(pupil);
        for (auto& v : scaled) v *= c;
        CHECK(detect_blinks(scaled, opts) == reference);

        const double k = 10 * unit(rng);
        std::vector<double> shifted(pupil);
        for (auto& v : shifted) v += k;
        CHECK(detect_blinks(shifted, opts) == reference);

        const double period_ms = 1000.0 / fs;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            CHECK(reference[i].duration * 1000.0 >= opts.min_blink_duration - period_ms);
            CHECK(reference[i].start < reference[i].end);
            if (i > 0) CHECK(reference[i - 1].end <= reference[i].start);
        }
    }
}
