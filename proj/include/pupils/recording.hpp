#pragma once

#include "pupils/options.hpp"
#include "pupils/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pupils {

/// Raw column data for one eye, before validation.
struct RecordingColumns {
    std::vector<double> timestamps;  // seconds
    std::vector<double> gaze_x;
    std::vector<double> gaze_y;
    std::vector<double> pupil;
    std::optional<std::vector<double>> velocity_x;
    std::optional<std::vector<double>> velocity_y;
    /// Names of the input columns in order; defaults are used when empty.
    std::vector<std::string> column_names;
};

/**
 * Validated monocular time series.
 *
 * Immutable once built: timestamps are strictly increasing, all columns have
 * the same length, and velocity_x/velocity_y are either both present or both
 * absent. Missing samples are NaN (pupil samples equal to 0 are also treated
 * as missing by the detection stages).
 */
class Recording {
public:
    /// Throws Error{EmptyInput, NonMonotonicTime, InvalidValue}.
    static Recording create(RecordingColumns columns, double fs, GazeUnits units);

    std::size_t size() const noexcept { return cols_.timestamps.size(); }
    double fs() const noexcept { return fs_; }
    GazeUnits units() const noexcept { return units_; }

    std::span<const double> timestamps() const noexcept { return cols_.timestamps; }
    std::span<const double> gaze_x() const noexcept { return cols_.gaze_x; }
    std::span<const double> gaze_y() const noexcept { return cols_.gaze_y; }
    std::span<const double> pupil() const noexcept { return cols_.pupil; }

    bool has_velocity() const noexcept { return cols_.velocity_x.has_value(); }
    std::span<const double> velocity_x() const noexcept;
    std::span<const double> velocity_y() const noexcept;

    /// 4 or 6 input column names, in input order.
    const std::vector<std::string>& column_names() const noexcept { return cols_.column_names; }

    /// Set when the median sampling interval is more than 10% away from 1/fs.
    const std::optional<std::string>& timing_warning() const noexcept { return timing_warning_; }

    /// Throws Error{RecordingTooShort} unless size() >= 2 * velocity_window + 1.
    void check_length(const PipelineOptions& options) const;

private:
    Recording() = default;

    RecordingColumns cols_;
    double fs_ = 0.0;
    GazeUnits units_ = GazeUnits::Millimeters;
    std::optional<std::string> timing_warning_;
};

}  // namespace pupils
