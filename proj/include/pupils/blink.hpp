#pragma once

#include "pupils/options.hpp"
#include "pupils/types.hpp"

#include <span>

namespace pupils {

/// Maximal runs of missing pupil samples (NaN or 0), sorted and disjoint.
Spans detect_missing(std::span<const double> pupil, double fs);

/// mean - k * sd over the valid (non-missing) samples, sd with n-1 denominator.
/// Throws Error{InsufficientValidData} with fewer than two valid samples.
double blink_threshold(std::span<const double> pupil, double sd_multiplier = 3.0);

/**
 * Blink spans: maximal runs of samples strictly below blink_threshold(),
 * where a missing run touching a sub-threshold run joins it into one event.
 * Runs shorter than `options.min_blink_duration` are dropped. Runs made only
 * of missing samples are not blinks (see detect_missing).
 */
Spans detect_blinks(std::span<const double> pupil, const PipelineOptions& options);

}  // namespace pupils
