#pragma once

#include "pupils/options.hpp"
#include "pupils/types.hpp"

#include <span>
#include <vector>

namespace pupils {

/// Padding in samples for a duration in milliseconds: round(ms * fs / 1000).
std::size_t padding_samples(double ms, double fs);

/// Grows each span by the pre/post padding, clamps to [0, length) and merges
/// overlapping or adjacent results. A merged span keeps the kind of its
/// first member. Output is sorted and disjoint.
Spans pad_spans(const Spans& spans, const PipelineOptions& options, std::size_t length);

/**
 * Linear fill of `pupil` across every span.
 *
 * Each span is drawn as the line through its nearest valid neighbours on
 * either side; a span with no valid neighbour on one side (recording edge)
 * holds the value of the other neighbour. Samples outside spans are copied
 * unchanged. Throws Error{AllDataMissing} if the series has no valid sample.
 */
std::vector<double> interpolate_linear(std::span<const double> pupil, const Spans& spans);

}  // namespace pupils
