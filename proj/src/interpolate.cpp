#include "pupils/interpolate.hpp"

#include "pupils/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace pupils {

std::size_t padding_samples(double ms, double fs) {
    return static_cast<std::size_t>(std::llround(ms * fs / 1000.0));
}

Spans pad_spans(const Spans& spans, const PipelineOptions& options, std::size_t length) {
    if (length == 0 || spans.empty()) return {};
    const std::size_t pre = padding_samples(options.pre_pad, options.fs);
    const std::size_t post = padding_samples(options.post_pad, options.fs);

    Spans grown;
    grown.reserve(spans.size());
    for (const auto& s : spans) {
        if (s.start >= s.end || s.start >= length) continue;
        const std::size_t start = s.start > pre ? s.start - pre : 0;
        const std::size_t end = std::min(length, std::min(s.end, length) + post);
        grown.push_back(make_span(s.kind, start, end, options.fs));
    }
    std::stable_sort(grown.begin(), grown.end(), [](const EventSpan& a, const EventSpan& b) { return a.start < b.start; });

    Spans merged;
    for (const auto& s : grown) {
        if (!merged.empty() && s.start <= merged.back().end) {
            auto& last = merged.back();
            if (s.end > last.end) last = make_span(last.kind, last.start, s.end, options.fs);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

std::vector<double> interpolate_linear(std::span<const double> pupil, const Spans& spans) {
    const std::size_t n = pupil.size();
    std::vector<double> out(pupil.begin(), pupil.end());
    if (spans.empty()) return out;

    const auto in_span = mask_from_spans(spans, n);
    auto anchor = [&](std::size_t i) { return !in_span[i] && !is_missing_pupil(pupil[i]); };
    if (std::none_of(pupil.begin(), pupil.end(), [](double v) { return !is_missing_pupil(v); }))
        throw Error(ErrorKind::AllDataMissing, "no valid pupil sample to interpolate from");

    for (const auto& s : spans) {
        const std::size_t end = std::min(s.end, n);
        if (s.start >= end) continue;

        std::optional<std::size_t> left;
        for (std::size_t i = s.start; i-- > 0;) {
            if (anchor(i)) {
                left = i;
                break;
            }
        }
        std::optional<std::size_t> right;
        for (std::size_t i = end; i < n; ++i) {
            if (anchor(i)) {
                right = i;
                break;
            }
        }

        if (left && right) {
            const double a = static_cast<double>(*left);
            const double b = static_cast<double>(*right);
            const double ya = pupil[*left];
            const double yb = pupil[*right];
            for (std::size_t i = s.start; i < end; ++i) {
                const double t = (static_cast<double>(i) - a) / (b - a);
                out[i] = ya + t * (yb - ya);
            }
        } else if (left || right) {
            const double hold = pupil[left ? *left : *right];
            std::fill(out.begin() + static_cast<std::ptrdiff_t>(s.start), out.begin() + static_cast<std::ptrdiff_t>(end),
                      hold);
        } else {
            throw Error(ErrorKind::AllDataMissing, "every valid pupil sample lies inside an interpolation span");
        }
    }
    return out;
}

}  // namespace pupils
