#include "pupils/options.hpp"

#include "pupils/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace pupils {

namespace {

constexpr std::array<std::string_view, 10> kKeys = {
    "fs",           "units",  "distance", "velocity-threshold", "velocity-window",
    "min-blink-ms", "pre-ms", "post-ms",  "cutoff-hz",          "blink-sd-multiplier",
};

double number_field(const nlohmann::json& value, std::string_view key) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::InvalidValue, std::string(key) + " must be a number");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorKind::InvalidValue, message);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::string canonical_option_key(std::string_view key) {
    std::string k(key);
    std::replace(k.begin(), k.end(), '_', '-');
    if (k == "screen-distance") k = "distance";
    else if (k == "cutoff") k = "cutoff-hz";
    else if (k == "pre-pad") k = "pre-ms";
    else if (k == "post-pad") k = "post-ms";
    else if (k == "min-blink-duration") k = "min-blink-ms";
    if (std::find(kKeys.begin(), kKeys.end(), k) == kKeys.end()) return {};
    return k;
}

PipelineOptions validate_options(const nlohmann::json& raw) {
    if (!raw.is_object()) throw Error(ErrorKind::InvalidValue, "options must be a key/value map");

    nlohmann::json canon = nlohmann::json::object();
    for (const auto& [key, value] : raw.items()) {
        auto k = canonical_option_key(key);
        if (k.empty()) throw Error(ErrorKind::InvalidValue, "unknown option '" + key + "'");
        if (value.is_null()) continue;
        canon[k] = value;
    }

    if (!canon.contains("fs")) throw Error(ErrorKind::MissingRequired, "fs (sampling frequency) is required");
    if (!canon.contains("units")) throw Error(ErrorKind::MissingRequired, "units is required");

    PipelineOptions o;
    o.fs = number_field(canon["fs"], "fs");
    if (!canon["units"].is_string()) throw Error(ErrorKind::InvalidValue, "units must be a string");
    o.units = parse_units(canon["units"].get<std::string>());

    if (canon.contains("distance")) o.screen_distance = number_field(canon["distance"], "distance");
    if (canon.contains("velocity-threshold"))
        o.velocity_threshold = number_field(canon["velocity-threshold"], "velocity-threshold");
    if (canon.contains("velocity-window")) {
        double w = number_field(canon["velocity-window"], "velocity-window");
        require(std::isfinite(w) && w == std::floor(w) && w < 1e9, "velocity-window must be an integer");
        o.velocity_window = static_cast<int>(w);
    }
    if (canon.contains("min-blink-ms")) o.min_blink_duration = number_field(canon["min-blink-ms"], "min-blink-ms");
    if (canon.contains("pre-ms")) o.pre_pad = number_field(canon["pre-ms"], "pre-ms");
    if (canon.contains("post-ms")) o.post_pad = number_field(canon["post-ms"], "post-ms");
    if (canon.contains("cutoff-hz")) o.cutoff = number_field(canon["cutoff-hz"], "cutoff-hz");
    if (canon.contains("blink-sd-multiplier"))
        o.blink_sd_multiplier = number_field(canon["blink-sd-multiplier"], "blink-sd-multiplier");

    return validate_options(o);
}

PipelineOptions validate_options(const PipelineOptions& o) {
    require(finite(o.fs) && o.fs > 0, "fs must be > 0");
    require(finite(o.cutoff) && o.cutoff > 0, "cutoff-hz must be > 0");
    require(o.cutoff < o.fs / 2,
            "cutoff-hz (" + std::to_string(o.cutoff) + ") must be below fs/2 (" + std::to_string(o.fs / 2) + ")");
    require(o.velocity_window >= 1, "velocity-window must be >= 1");
    require(finite(o.min_blink_duration) && o.min_blink_duration >= 0, "min-blink-ms must be >= 0");
    require(finite(o.pre_pad) && o.pre_pad >= 0, "pre-ms must be >= 0");
    require(finite(o.post_pad) && o.post_pad >= 0, "post-ms must be >= 0");
    require(finite(o.velocity_threshold) && o.velocity_threshold > 0, "velocity-threshold must be > 0");
    require(finite(o.blink_sd_multiplier) && o.blink_sd_multiplier >= 0, "blink-sd-multiplier must be >= 0");
    if (o.screen_distance) require(finite(*o.screen_distance) && *o.screen_distance > 0, "distance must be > 0");
    return o;
}

nlohmann::ordered_json options_to_json(const PipelineOptions& o) {
    nlohmann::ordered_json j;
    j["fs"] = o.fs;
    j["units"] = std::string(to_string(o.units));
    j["distance"] = o.screen_distance ? nlohmann::ordered_json(*o.screen_distance) : nlohmann::ordered_json(nullptr);
    j["velocity-threshold"] = o.velocity_threshold;
    j["velocity-window"] = o.velocity_window;
    j["min-blink-ms"] = o.min_blink_duration;
    j["pre-ms"] = o.pre_pad;
    j["post-ms"] = o.post_pad;
    j["cutoff-hz"] = o.cutoff;
    j["blink-sd-multiplier"] = o.blink_sd_multiplier;
    return j;
}

double require_screen_distance(const PipelineOptions& options) {
    if (!options.screen_distance)
        throw Error(ErrorKind::MissingRequired, "distance (head-to-screen distance) is required for saccade detection");
    return *options.screen_distance;
}

}  // namespace pupils
