#pragma once

#include "pupils/frame.hpp"
#include "pupils/options.hpp"
#include "pupils/recording.hpp"

#include <string>
#include <string_view>

namespace pupils {

/**
 * Parses a tracker export: time, x, y, pupil[, vx, vy], comma separated.
 *
 * A first row whose first cell is not a number is taken as a header. Cells
 * that are empty, "NaN" or "nan" become missing samples.
 *
 * Throws Error with kind EmptyInput, BadColumnCount, UnparsableCell,
 * NonMonotonicTime, or RecordingTooShort (fewer than 2w+1 rows).
 */
Recording parse_recording(std::string_view csv, const PipelineOptions& options);

/// CSV with a header row and one row per sample; values use 17 significant
/// digits, missing values are written as NaN, flags as 0/1.
std::string write_annotated(const AnnotatedFrame& frame);

/// Reads back the output of write_annotated (9 or 10 columns, header required).
AnnotatedFrame parse_annotated(std::string_view csv);

/// Pretty-printed JSON with a fixed key order and no trailing whitespace.
std::string write_report(const QualityReport& report);

/// 17-significant-digit rendering used for every CSV value; "NaN" for missing.
std::string format_value(double v);

}  // namespace pupils
