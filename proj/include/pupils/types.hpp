#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pupils {

/// Missing samples are stored as quiet NaN in every series.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) noexcept { return std::isnan(v); }

/// Trackers emit either NaN or 0 for pupil samples they lost; both count as missing.
inline bool is_missing_pupil(double v) noexcept { return !std::isfinite(v) || v == 0.0; }

enum class GazeUnits { Pixels, Centimeters, Millimeters };

/// Accepts "px", "pixels", "cm", "mm". Throws Error{InvalidValue} otherwise.
GazeUnits parse_units(std::string_view text);
std::string_view to_string(GazeUnits units) noexcept;

enum class EventKind { Missing, Blink, Saccade };

std::string_view to_string(EventKind kind) noexcept;

/// Half-open sample interval [start, end) tagged with its event kind.
struct EventSpan {
    EventKind kind = EventKind::Missing;
    std::size_t start = 0;
    std::size_t end = 0;
    double onset = 0.0;     // seconds
    double duration = 0.0;  // seconds

    std::size_t length() const noexcept { return end - start; }
    bool contains(std::size_t i) const noexcept { return i >= start && i < end; }

    /// Spans compare by kind and sample bounds; timing is derived data.
    friend bool operator==(const EventSpan& a, const EventSpan& b) noexcept {
        return a.kind == b.kind && a.start == b.start && a.end == b.end;
    }
};

using Spans = std::vector<EventSpan>;

EventSpan make_span(EventKind kind, std::size_t start, std::size_t end, double fs);

/// Maximal runs of nonzero entries of `mask`, in order.
Spans spans_from_mask(std::span<const std::uint8_t> mask, EventKind kind, double fs);

/// 0/1 mask of length `length` covering every span.
std::vector<std::uint8_t> mask_from_spans(const Spans& spans, std::size_t length);

/// Number of samples covered by the union of `spans`.
std::size_t covered_samples(const Spans& spans, std::size_t length);

/// Recomputes onset from timestamps and duration from fs.
void stamp_spans(Spans& spans, std::span<const double> timestamps, double fs);

}  // namespace pupils
