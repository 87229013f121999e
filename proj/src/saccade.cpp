#include "pupils/saccade.hpp"

#include "pupils/error.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace pupils {

double visual_angle(const GazeVector& p, const GazeVector& q) noexcept {
    const double cx = p.y * q.z - p.z * q.y;
    const double cy = p.z * q.x - p.x * q.z;
    const double cz = p.x * q.y - p.y * q.x;
    const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
    const double dot = p.x * q.x + p.y * q.y + p.z * q.z;
    return std::atan2(cross, dot) * (180.0 / std::numbers::pi);
}

std::vector<double> angular_velocity(std::span<const double> gaze_x, std::span<const double> gaze_y,
                                     double screen_distance, double fs, int window) {
    if (window < 1) throw Error(ErrorKind::InvalidValue, "velocity window must be >= 1");
    const std::size_t n = gaze_x.size();
    const auto w = static_cast<std::size_t>(window);
    if (gaze_y.size() != n) throw Error(ErrorKind::InvalidValue, "gaze_x and gaze_y differ in length");
    if (n <= w)
        throw Error(ErrorKind::RecordingTooShort,
                    std::to_string(n) + " samples is not longer than the velocity window " + std::to_string(w));

    const double dt = static_cast<double>(window) / fs;
    std::vector<double> v(n, kMissing);
    for (std::size_t i = w; i < n; ++i) {
        const std::size_t j = i - w;
        if (is_missing(gaze_x[i]) || is_missing(gaze_y[i]) || is_missing(gaze_x[j]) || is_missing(gaze_y[j]))
            continue;
        const GazeVector now{gaze_x[i], gaze_y[i], screen_distance};
        const GazeVector before{gaze_x[j], gaze_y[j], screen_distance};
        v[i] = visual_angle(now, before) / dt;
    }
    return v;
}

std::vector<double> angular_velocity(const Recording& recording, const PipelineOptions& options) {
    return angular_velocity(recording.gaze_x(), recording.gaze_y(), require_screen_distance(options), options.fs,
                            options.velocity_window);
}

Spans detect_saccades(std::span<const double> velocity, const PipelineOptions& options) {
    std::vector<std::uint8_t> mask(velocity.size());
    for (std::size_t i = 0; i < velocity.size(); ++i)
        mask[i] = (!is_missing(velocity[i]) && velocity[i] > options.velocity_threshold) ? 1 : 0;
    return spans_from_mask(mask, EventKind::Saccade, options.fs);
}

}  // namespace pupils
