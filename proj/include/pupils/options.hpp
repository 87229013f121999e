#pragma once

#include "pupils/types.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace pupils {

/**
 * User parameters for one pipeline run.
 *
 * Only `fs` and `units` are compulsory. `screen_distance` is needed by the
 * saccade stage (it is the shared z-coordinate of the gaze vectors) and must
 * be expressed in the same units as the gaze coordinates. Every other field
 * falls back to its default.
 *
 * Raw parameter maps use the CLI flag names as keys:
 *
 *     {"fs": 500, "units": "mm", "distance": 600, "velocity-threshold": 30,
 *      "velocity-window": 5, "min-blink-ms": 30, "pre-ms": 50,
 *      "post-ms": 150, "cutoff-hz": 10, "blink-sd-multiplier": 3}
 *
 * Underscores are accepted in place of hyphens, and a few long-form aliases
 * ("screen_distance", "cutoff", "pre_pad", "post_pad", "min_blink_duration")
 * are understood.
 */
struct PipelineOptions {
    double fs = 0.0;
    GazeUnits units = GazeUnits::Millimeters;
    std::optional<double> screen_distance;
    double velocity_threshold = 30.0;  // deg/s
    int velocity_window = 5;           // samples
    double min_blink_duration = 30.0;  // ms
    double pre_pad = 50.0;             // ms
    double post_pad = 150.0;           // ms
    double cutoff = 10.0;              // Hz
    double blink_sd_multiplier = 3.0;

    friend bool operator==(const PipelineOptions&, const PipelineOptions&) = default;
};

/// Fills defaults and checks every invariant.
/// Throws Error{MissingRequired} when fs or units is absent, Error{InvalidValue}
/// for out-of-range values, wrong types, or unknown keys.
PipelineOptions validate_options(const nlohmann::json& raw);

/// Re-validates an already constructed option set.
PipelineOptions validate_options(const PipelineOptions& options);

/// Canonical raw map (flag-name keys, fixed key order); feeding it back to
/// validate_options reproduces `options`.
nlohmann::ordered_json options_to_json(const PipelineOptions& options);

/// Returns the screen distance or throws Error{MissingRequired}.
double require_screen_distance(const PipelineOptions& options);

/// Canonical raw-map key for `key`, or empty if the key is unknown.
std::string canonical_option_key(std::string_view key);

}  // namespace pupils
