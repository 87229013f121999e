#include "pupils/io.hpp"

#include "pupils/error.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace pupils {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_missing_token(std::string_view s) { return s.empty() || s == "NaN" || s == "nan" || s == "NAN"; }

std::optional<double> to_number(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

struct Table {
    std::vector<std::string> header;  // empty when the input had none
    std::vector<std::vector<double>> columns;
};

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(pos)));
            break;
        }
        cells.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return cells;
}

Table read_table(std::string_view csv) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto nl = csv.find('\n', pos);
        if (nl == std::string_view::npos) nl = csv.size();
        auto line = trim(csv.substr(pos, nl - pos));
        if (!line.empty()) lines.push_back(line);
        pos = nl + 1;
    }
    if (lines.empty()) throw Error(ErrorKind::EmptyInput, "input contains no rows");

    Table table;
    std::size_t first_data = 0;
    {
        auto cells = split_row(lines.front());
        if (!is_missing_token(cells.front()) && !to_number(cells.front())) {
            for (auto c : cells) table.header.emplace_back(c);
            first_data = 1;
        }
    }
    if (first_data >= lines.size()) throw Error(ErrorKind::EmptyInput, "input contains a header but no data rows");

    const std::size_t width = table.header.empty() ? split_row(lines[first_data]).size() : table.header.size();
    table.columns.assign(width, {});
    for (auto& c : table.columns) c.reserve(lines.size() - first_data);

    for (std::size_t r = first_data; r < lines.size(); ++r) {
        const auto cells = split_row(lines[r]);
        if (cells.size() != width)
            throw Error(ErrorKind::BadColumnCount, "row " + std::to_string(r + 1) + " has " +
                                                       std::to_string(cells.size()) + " columns, expected " +
                                                       std::to_string(width));
        for (std::size_t c = 0; c < width; ++c) {
            if (is_missing_token(cells[c])) {
                table.columns[c].push_back(kMissing);
                continue;
            }
            auto v = to_number(cells[c]);
            if (!v)
                throw Error(ErrorKind::UnparsableCell, "row " + std::to_string(r + 1) + ", column " +
                                                           std::to_string(c + 1) + ": '" + std::string(cells[c]) +
                                                           "' is not a number");
            table.columns[c].push_back(*v);
        }
    }
    return table;
}

nlohmann::ordered_json span_json(const EventSpan& s) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(s.kind));
    j["start"] = s.start;
    j["end"] = s.end;
    j["onset_s"] = s.onset;
    j["duration_s"] = s.duration;
    return j;
}

}  // namespace

double QualityReport::mean_blink_duration_s() const noexcept {
    if (blink_spans.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& s : blink_spans) sum += s.duration;
    return sum / static_cast<double>(blink_spans.size());
}

std::string format_value(double v) {
    if (std::isnan(v)) return "NaN";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

Recording parse_recording(std::string_view csv, const PipelineOptions& options) {
    auto table = read_table(csv);
    const std::size_t width = table.columns.size();
    if (width != 4 && width != 6)
        throw Error(ErrorKind::BadColumnCount,
                    "expected 4 (time, x, y, pupil) or 6 (+ vx, vy) columns, found " + std::to_string(width));

    RecordingColumns cols;
    cols.timestamps = std::move(table.columns[0]);
    cols.gaze_x = std::move(table.columns[1]);
    cols.gaze_y = std::move(table.columns[2]);
    cols.pupil = std::move(table.columns[3]);
    if (width == 6) {
        cols.velocity_x = std::move(table.columns[4]);
        cols.velocity_y = std::move(table.columns[5]);
    }
    cols.column_names = std::move(table.header);

    auto rec = Recording::create(std::move(cols), options.fs, options.units);
    rec.check_length(options);
    return rec;
}

std::string write_annotated(const AnnotatedFrame& frame) {
    std::string out;
    const std::size_t rows = frame.rows();
    out.reserve((rows + 1) * frame.columns.size() * 20);

    for (std::size_t c = 0; c < frame.columns.size(); ++c) {
        if (c) out += ',';
        out += frame.columns[c].name;
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < frame.columns.size(); ++c) {
            if (c) out += ',';
            const auto& col = frame.columns[c];
            const double v = col.values[r];
            if (col.integral && !std::isnan(v)) out += v != 0.0 ? '1' : '0';
            else out += format_value(v);
        }
        out += '\n';
    }
    return out;
}

AnnotatedFrame parse_annotated(std::string_view csv) {
    auto table = read_table(csv);
    if (table.header.empty()) throw Error(ErrorKind::InvalidValue, "annotated frame must start with a header row");
    const std::size_t width = table.columns.size();
    if (width != 9 && width != 10)
        throw Error(ErrorKind::BadColumnCount, "annotated frame must have 9 or 10 columns, found " + std::to_string(width));

    AnnotatedFrame frame;
    frame.velocity_computed = (width == 9);
    for (std::size_t c = 0; c < width; ++c)
        frame.columns.push_back({table.header[c], std::move(table.columns[c]), false});
    for (auto idx : {frame.blink_index(), frame.saccade_index()}) {
        auto& col = frame.columns[idx];
        col.integral = true;
        for (double v : col.values)
            if (v != 0.0 && v != 1.0) throw Error(ErrorKind::InvalidValue, "flag column '" + col.name + "' must be 0 or 1");
    }
    return frame;
}

std::string write_report(const QualityReport& report) {
    nlohmann::ordered_json j;
    j["n_blinks"] = report.n_blinks();
    j["blink_spans"] = nlohmann::ordered_json::array();
    for (const auto& s : report.blink_spans) j["blink_spans"].push_back(span_json(s));
    j["n_saccades"] = report.n_saccades();
    j["saccade_spans"] = nlohmann::ordered_json::array();
    for (const auto& s : report.saccade_spans) j["saccade_spans"].push_back(span_json(s));
    j["n_missing_samples"] = report.n_missing_samples;
    j["fraction_interpolated"] = report.fraction_interpolated;
    j["mean_blink_duration_s"] = report.mean_blink_duration_s();
    j["peak_velocity_deg_s"] =
        report.peak_velocity_deg_s ? nlohmann::ordered_json(*report.peak_velocity_deg_s) : nlohmann::ordered_json(nullptr);
    j["parameters_used"] = options_to_json(report.parameters_used);
    return j.dump(2);
}

}  // namespace pupils
