#include <doctest.h>

#include "pupils/error.hpp"
#include "pupils/interpolate.hpp"
#include "synth.hpp"

#include <cstring>
#include <random>

using namespace pupils;
using namespace pupils::testing;

namespace {

const double NaN = kMissing;

PipelineOptions padding(double fs, double pre = 50, double post = 150) {
    auto o = options(fs);
    o.pre_pad = pre;
    o.post_pad = post;
    return o;
}

EventSpan gap(std::size_t s, std::size_t e) { return make_span(EventKind::Missing, s, e, 1000); }

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("padding examples") {
    auto one = pad_spans({gap(100, 110)}, padding(1000), 5000);
    REQUIRE(one.size() == 1);
    CHECK(one[0].start == 50);
    CHECK(one[0].end == 260);

    auto clamped = pad_spans({gap(10, 20)}, padding(1000), 5000);
    REQUIRE(clamped.size() == 1);
    CHECK(clamped[0].start == 0);
    CHECK(clamped[0].end == 170);

    auto tail = pad_spans({gap(4990, 4995)}, padding(1000), 5000);
    CHECK(tail[0].end == 5000);

    // 500 Hz: 25 samples before, 75 after; the two grown spans overlap.
    auto merged = pad_spans({gap(100, 110), gap(120, 130)}, padding(500), 5000);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].start == 75);
    CHECK(merged[0].end == 205);

    // 60 Hz: round(3.0) = 3 and round(9.0) = 9 samples.
    auto low = pad_spans({gap(100, 110)}, padding(60), 5000);
    CHECK(low[0].start == 97);
    CHECK(low[0].end == 119);
    CHECK(padding_samples(50, 60) == 3);
    CHECK(padding_samples(150, 60) == 9);
    CHECK(padding_samples(10, 60) == 1);  // 0.6 rounds up
    CHECK(padding_samples(5, 60) == 0);   // 0.3 rounds down

    CHECK(pad_spans({}, padding(500), 100).empty());
}

TEST_CASE("adjacent padded spans merge") {
    // [10,20) grows to [20-pre .. 20+post); with post = 0 and pre = 0 adjacent spans still merge.
    auto out = pad_spans({gap(10, 20), gap(20, 30)}, padding(1000, 0, 0), 100);
    REQUIRE(out.size() == 1);
    CHECK(out[0].start == 10);
    CHECK(out[0].end == 30);
    // Unsorted input is accepted.
    auto unsorted = pad_spans({gap(60, 62), gap(10, 12)}, padding(1000, 0, 0), 100);
    REQUIRE(unsorted.size() == 2);
    CHECK(unsorted[0].start == 10);
}

TEST_CASE("property: padding matches a per-sample oracle and is monotone") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t length = 20 + static_cast<std::size_t>(unit(rng) * 600);
        const double fs = unit(rng) < 0.5 ? 60.0 : 1000.0 * unit(rng) + 30.0;
        const double pre = 200 * unit(rng);
        const double post = 300 * unit(rng);

        std::vector<bool> raw(length, false);
        for (std::size_t k = 0; k < length; ++k) raw[k] = unit(rng) < 0.04;
        const auto raw_runs = runs(raw);
        Spans spans;
        for (auto [s, e] : raw_runs) spans.push_back(gap(s, e));

        const auto out = pad_spans(spans, padding(fs, pre, post), length);
        const auto expected =
            runs(padded_mask_oracle(raw_runs, padding_samples(pre, fs), padding_samples(post, fs), length));
        REQUIRE(out.size() == expected.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            CHECK(out[i].start == expected[i].first);
            CHECK(out[i].end == expected[i].second);
        }

        const auto bigger = pad_spans(spans, padding(fs, pre + 20, post + 20), length);
        CHECK(covered_samples(bigger, length) >= covered_samples(out, length));
    }
}

TEST_CASE("linear fill examples") {
    CHECK(interpolate_linear(std::vector<double>{2, NaN, 4}, {gap(1, 2)}) == std::vector<double>{2, 3, 4});
    CHECK(interpolate_linear(std::vector<double>{NaN, NaN, 5, 6}, {gap(0, 2)}) == std::vector<double>{5, 5, 5, 6});
    CHECK(interpolate_linear(std::vector<double>{5, 6, 0, NaN}, {gap(2, 4)}) == std::vector<double>{5, 6, 6, 6});
    // Valid samples inside a span are replaced too (padding regions).
    CHECK(interpolate_linear(std::vector<double>{1, 9, 9, 9, 5}, {gap(1, 4)}) == std::vector<double>{1, 2, 3, 4, 5});
    // No spans: untouched, even with gaps.
    const std::vector<double> holes{1, NaN, 3};
    const auto same = interpolate_linear(holes, {});
    CHECK(std::isnan(same[1]));
}

TEST_CASE("fill errors") {
    try {
        interpolate_linear(std::vector<double>{NaN, 0, NaN}, {gap(0, 2)});
        FAIL("expected AllDataMissing");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AllDataMissing);
    }
    CHECK_THROWS_AS(interpolate_linear(std::vector<double>{4, 4, 4}, {gap(0, 3)}), Error);
}

TEST_CASE("property: linear fill matches a pointwise line oracle") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(unit(rng) * 300);
        std::vector<double> pupil(n);
        for (auto& v : pupil) v = 2 + 6 * unit(rng);
        std::vector<bool> in(n, false);
        for (std::size_t i = 1; i + 1 < n; ++i) in[i] = unit(rng) < 0.15 || (i > 0 && in[i - 1] && unit(rng) < 0.7);
        for (std::size_t i = 0; i < n; ++i)
            if (in[i] && unit(rng) < 0.5) pupil[i] = unit(rng) < 0.5 ? NaN : 0.0;
        Spans spans;
        for (auto [s, e] : runs(in)) spans.push_back(gap(s, e));

        const auto out = interpolate_linear(pupil, spans);
        for (const auto& s : spans) {
            // Interior spans: anchors are the first samples outside.
            const std::size_t a = s.start - 1, b = s.end;
            for (std::size_t i = s.start; i < s.end; ++i) {
                const double expected = pupil[a] + (pupil[b] - pupil[a]) * double(i - a) / double(b - a);
                REQUIRE(std::abs(out[i] - expected) < 1e-12);
                CHECK(out[i] >= std::min(pupil[a], pupil[b]) - 1e-12);
                CHECK(out[i] <= std::max(pupil[a], pupil[b]) + 1e-12);
                if (i > s.start) CHECK((out[i] - out[i - 1]) * (pupil[b] - pupil[a]) >= -1e-12);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!in[i]) CHECK(bit_equal(out[i], pupil[i]));

        const auto twice = interpolate_linear(out, spans);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(bit_equal(twice[i], out[i]));
    }
}
