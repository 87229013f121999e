#pragma once

#include "pupils/options.hpp"
#include "pupils/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pupils {

struct FrameColumn {
    std::string name;
    std::vector<double> values;
    bool integral = false;  // written as 0/1
};

/**
 * Output table: the input columns in input order, then the computed angular
 * velocity (only when the input had no velocity columns), then blink flag,
 * saccade flag, interpolated pupil and denoised pupil.
 */
struct AnnotatedFrame {
    std::vector<FrameColumn> columns;
    bool velocity_computed = false;

    std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().values.size(); }
    std::size_t input_columns() const noexcept { return columns.size() - 4 - (velocity_computed ? 1 : 0); }

    // 0-based indices of the appended columns.
    std::size_t velocity_index() const noexcept { return input_columns(); }
    std::size_t blink_index() const noexcept { return columns.size() - 4; }
    std::size_t saccade_index() const noexcept { return columns.size() - 3; }
    std::size_t interpolated_index() const noexcept { return columns.size() - 2; }
    std::size_t denoised_index() const noexcept { return columns.size() - 1; }

    const FrameColumn& blink() const { return columns.at(blink_index()); }
    const FrameColumn& saccade() const { return columns.at(saccade_index()); }
    const FrameColumn& interpolated() const { return columns.at(interpolated_index()); }
    const FrameColumn& denoised() const { return columns.at(denoised_index()); }
};

inline constexpr const char* kVelocityColumn = "velocity_deg_s";
inline constexpr const char* kBlinkColumn = "blink";
inline constexpr const char* kSaccadeColumn = "saccade";
inline constexpr const char* kInterpolatedColumn = "pupil_interpolated";
inline constexpr const char* kDenoisedColumn = "pupil_denoised";

/// Event metadata and data-quality figures for one processed recording.
struct QualityReport {
    Spans blink_spans;
    Spans saccade_spans;
    std::size_t n_missing_samples = 0;
    double fraction_interpolated = 0.0;
    std::optional<double> peak_velocity_deg_s;  // unset when no velocity sample is defined
    PipelineOptions parameters_used;

    std::size_t n_blinks() const noexcept { return blink_spans.size(); }
    std::size_t n_saccades() const noexcept { return saccade_spans.size(); }
    /// Arithmetic mean of blink durations; 0 with no blinks.
    double mean_blink_duration_s() const noexcept;
};

}  // namespace pupils
