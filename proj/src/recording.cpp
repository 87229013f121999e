#include "pupils/recording.hpp"

#include "pupils/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pupils {

namespace {

const std::vector<std::string>& default_names(bool with_velocity) {
    static const std::vector<std::string> four = {"time", "x", "y", "pupil"};
    static const std::vector<std::string> six = {"time", "x", "y", "pupil", "vx", "vy"};
    return with_velocity ? six : four;
}

double median_interval(std::span<const double> t) {
    std::vector<double> d;
    d.reserve(t.size());
    for (std::size_t i = 1; i < t.size(); ++i) d.push_back(t[i] - t[i - 1]);
    auto mid = d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2);
    std::nth_element(d.begin(), mid, d.end());
    if (d.size() % 2 == 1) return *mid;
    double upper = *mid;
    double lower = *std::max_element(d.begin(), mid);
    return 0.5 * (lower + upper);
}

}  // namespace

Recording Recording::create(RecordingColumns columns, double fs, GazeUnits units) {
    if (!(std::isfinite(fs) && fs > 0)) throw Error(ErrorKind::InvalidValue, "fs must be > 0");
    const std::size_t n = columns.timestamps.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "recording has no samples");

    if (columns.velocity_x.has_value() != columns.velocity_y.has_value())
        throw Error(ErrorKind::InvalidValue, "velocity_x and velocity_y must be given together");

    auto same_length = [n](const std::vector<double>& v) { return v.size() == n; };
    bool ok = same_length(columns.gaze_x) && same_length(columns.gaze_y) && same_length(columns.pupil);
    if (columns.velocity_x) ok = ok && same_length(*columns.velocity_x) && same_length(*columns.velocity_y);
    if (!ok) throw Error(ErrorKind::InvalidValue, "all columns must have the same length");

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(columns.timestamps[i]))
            throw Error(ErrorKind::NonMonotonicTime, "timestamp at row " + std::to_string(i) + " is not finite");
        if (i > 0 && !(columns.timestamps[i] > columns.timestamps[i - 1]))
            throw Error(ErrorKind::NonMonotonicTime,
                        "timestamps must be strictly increasing (row " + std::to_string(i) + ")");
    }

    const bool with_velocity = columns.velocity_x.has_value();
    if (columns.column_names.empty()) columns.column_names = default_names(with_velocity);
    if (columns.column_names.size() != (with_velocity ? 6u : 4u))
        throw Error(ErrorKind::InvalidValue, "column name count does not match the column count");

    Recording r;
    r.cols_ = std::move(columns);
    r.fs_ = fs;
    r.units_ = units;

    if (n >= 2) {
        const double expected = 1.0 / fs;
        const double median = median_interval(r.cols_.timestamps);
        if (std::abs(median - expected) > 0.1 * expected) {
            r.timing_warning_ = "median sample interval " + std::to_string(median) + " s differs from 1/fs = " +
                                std::to_string(expected) + " s by more than 10%";
        }
    }
    return r;
}

std::span<const double> Recording::velocity_x() const noexcept {
    if (!cols_.velocity_x) return {};
    return *cols_.velocity_x;
}

std::span<const double> Recording::velocity_y() const noexcept {
    if (!cols_.velocity_y) return {};
    return *cols_.velocity_y;
}

void Recording::check_length(const PipelineOptions& options) const {
    const auto needed = 2 * static_cast<std::size_t>(options.velocity_window) + 1;
    if (size() < needed)
        throw Error(ErrorKind::RecordingTooShort, "recording has " + std::to_string(size()) +
                                                      " samples; at least " + std::to_string(needed) +
                                                      " are needed for velocity-window " +
                                                      std::to_string(options.velocity_window));
}

}  // namespace pupils
