#include "pupils/types.hpp"

#include "pupils/error.hpp"

#include <string>

namespace pupils {

GazeUnits parse_units(std::string_view text) {
    if (text == "px" || text == "pixels") return GazeUnits::Pixels;
    if (text == "cm") return GazeUnits::Centimeters;
    if (text == "mm") return GazeUnits::Millimeters;
    throw Error(ErrorKind::InvalidValue, "units must be one of px, cm, mm (got '" + std::string(text) + "')");
}

std::string_view to_string(GazeUnits units) noexcept {
    switch (units) {
        case GazeUnits::Pixels: return "px";
        case GazeUnits::Centimeters: return "cm";
        case GazeUnits::Millimeters: return "mm";
    }
    return "?";
}

std::string_view to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::Missing: return "missing";
        case EventKind::Blink: return "blink";
        case EventKind::Saccade: return "saccade";
    }
    return "?";
}

EventSpan make_span(EventKind kind, std::size_t start, std::size_t end, double fs) {
    EventSpan s;
    s.kind = kind;
    s.start = start;
    s.end = end;
    s.onset = static_cast<double>(start) / fs;
    s.duration = static_cast<double>(end - start) / fs;
    return s;
}

Spans spans_from_mask(std::span<const std::uint8_t> mask, EventKind kind, double fs) {
    Spans out;
    std::size_t i = 0;
    const std::size_t n = mask.size();
    while (i < n) {
        if (!mask[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && mask[j]) ++j;
        out.push_back(make_span(kind, i, j, fs));
        i = j;
    }
    return out;
}

std::vector<std::uint8_t> mask_from_spans(const Spans& spans, std::size_t length) {
    std::vector<std::uint8_t> mask(length, 0);
    for (const auto& s : spans) {
        for (std::size_t i = s.start; i < s.end && i < length; ++i) mask[i] = 1;
    }
    return mask;
}

std::size_t covered_samples(const Spans& spans, std::size_t length) {
    std::size_t count = 0;
    for (auto m : mask_from_spans(spans, length)) count += m;
    return count;
}

void stamp_spans(Spans& spans, std::span<const double> timestamps, double fs) {
    for (auto& s : spans) {
        s.onset = s.start < timestamps.size() ? timestamps[s.start] : static_cast<double>(s.start) / fs;
        s.duration = static_cast<double>(s.end - s.start) / fs;
    }
}

}  // namespace pupils
