#include "pupils/blink.hpp"

#include "pupils/error.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace pupils {

Spans detect_missing(std::span<const double> pupil, double fs) {
    std::vector<std::uint8_t> mask(pupil.size());
    for (std::size_t i = 0; i < pupil.size(); ++i) mask[i] = is_missing_pupil(pupil[i]) ? 1 : 0;
    return spans_from_mask(mask, EventKind::Missing, fs);
}

double blink_threshold(std::span<const double> pupil, double sd_multiplier) {
    // Two-pass mean / variance for stability on long recordings.
    std::size_t n = 0;
    double sum = 0.0;
    for (double v : pupil) {
        if (is_missing_pupil(v)) continue;
        sum += v;
        ++n;
    }
    if (n < 2)
        throw Error(ErrorKind::InsufficientValidData,
                    "blink threshold needs at least 2 valid pupil samples (found " + std::to_string(n) + ")");
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : pupil) {
        if (is_missing_pupil(v)) continue;
        ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return mean - sd_multiplier * sd;
}

Spans detect_blinks(std::span<const double> pupil, const PipelineOptions& options) {
    const double threshold = blink_threshold(pupil, options.blink_sd_multiplier);
    const std::size_t n = pupil.size();
    const double fs = options.fs;

    Spans out;
    std::size_t i = 0;
    while (i < n) {
        const bool missing = is_missing_pupil(pupil[i]);
        if (!missing && !(pupil[i] < threshold)) {
            ++i;
            continue;
        }
        // Run of samples that are either missing or below threshold.
        std::size_t j = i;
        bool any_low = false;
        while (j < n) {
            const double v = pupil[j];
            if (is_missing_pupil(v)) {
                ++j;
            } else if (v < threshold) {
                any_low = true;
                ++j;
            } else {
                break;
            }
        }
        const double duration_ms = static_cast<double>(j - i) * 1000.0 / fs;
        if (any_low && duration_ms >= options.min_blink_duration) out.push_back(make_span(EventKind::Blink, i, j, fs));
        i = j;
    }
    return out;
}

}  // namespace pupils
