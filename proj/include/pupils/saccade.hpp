#pragma once

#include "pupils/options.hpp"
#include "pupils/recording.hpp"
#include "pupils/types.hpp"

#include <span>
#include <vector>

namespace pupils {

/// Gaze point on the screen plane, seen from the head at the origin.
/// z is the head-to-screen distance, in the same units as x and y.
struct GazeVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Angle in degrees between two gaze vectors, in [0, 180].
///
/// Evaluated as atan2(|p x q|, p . q): the same angle as the arccos of the
/// normalized dot product, but without its loss of precision for
/// near-parallel vectors. Never returns NaN for nonzero inputs.
double visual_angle(const GazeVector& p, const GazeVector& q) noexcept;

/**
 * Angular gaze velocity in deg/s using a backward difference over `window`
 * samples: v[i] = visual_angle(P_i, P_{i-window}) * fs / window.
 *
 * v[i] is NaN for i < window and whenever either endpoint has a missing
 * coordinate. Throws Error{RecordingTooShort} if the series is not longer
 * than `window`.
 */
std::vector<double> angular_velocity(std::span<const double> gaze_x, std::span<const double> gaze_y,
                                     double screen_distance, double fs, int window);

/// Same, taking coordinates and parameters from a recording and options.
/// Throws Error{MissingRequired} when options.screen_distance is unset.
std::vector<double> angular_velocity(const Recording& recording, const PipelineOptions& options);

/// Maximal runs of v > velocity_threshold (strict). NaN samples break runs.
Spans detect_saccades(std::span<const double> velocity, const PipelineOptions& options);

}  // namespace pupils
