#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pupils/blink.hpp"
#include "pupils/cli.hpp"
#include "pupils/error.hpp"
#include "pupils/interpolate.hpp"
#include "pupils/io.hpp"
#include "pupils/options.hpp"
#include "pupils/pipeline.hpp"
#include "pupils/saccade.hpp"
#include "pupils/smooth.hpp"

#include <array>
#include <sstream>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pupils;

namespace {

nlohmann::json to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<GazeUnits>(obj)) return std::string(to_string(obj.cast<GazeUnits>()));
    throw Error(ErrorKind::InvalidValue, "unsupported option value type: " + std::string(py::str(obj.get_type())));
}

PipelineOptions options_from_kwargs(const py::kwargs& kwargs) {
    nlohmann::json raw = nlohmann::json::object();
    for (const auto& [key, value] : kwargs) raw[key.cast<std::string>()] = to_json(value);
    return validate_options(raw);
}

Recording recording_from_columns(std::vector<double> t, std::vector<double> x, std::vector<double> y,
                                 std::vector<double> pupil, double fs, GazeUnits units,
                                 std::optional<std::vector<double>> vx, std::optional<std::vector<double>> vy) {
    RecordingColumns cols;
    cols.timestamps = std::move(t);
    cols.gaze_x = std::move(x);
    cols.gaze_y = std::move(y);
    cols.pupil = std::move(pupil);
    cols.velocity_x = std::move(vx);
    cols.velocity_y = std::move(vy);
    return Recording::create(std::move(cols), fs, units);
}

std::vector<double> to_list(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pupillometry preprocessing pipeline (C++ core).";

    static py::exception<Error> pupils_error(m, "PupilsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = pupils_error;
            py::object instance = err(e.what());
            instance.attr("kind") = std::string(to_string(e.kind()));
            instance.attr("stage") = e.stage();
            PyErr_SetObject(pupils_error.ptr(), instance.ptr());
        }
    });

    py::enum_<GazeUnits>(m, "GazeUnits")
        .value("pixels", GazeUnits::Pixels)
        .value("cm", GazeUnits::Centimeters)
        .value("mm", GazeUnits::Millimeters);

    py::enum_<EventKind>(m, "EventKind")
        .value("missing", EventKind::Missing)
        .value("blink", EventKind::Blink)
        .value("saccade", EventKind::Saccade);

    py::class_<EventSpan>(m, "EventSpan")
        .def(py::init([](EventKind kind, std::size_t start, std::size_t end, double fs) {
                 if (end <= start) throw Error(ErrorKind::InvalidValue, "span end must exceed start");
                 return make_span(kind, start, end, fs);
             }),
             py::arg("kind"), py::arg("start"), py::arg("end"), py::arg("fs") = 1.0)
        .def_readonly("kind", &EventSpan::kind)
        .def_readonly("start", &EventSpan::start)
        .def_readonly("end", &EventSpan::end)
        .def_readonly("onset", &EventSpan::onset)
        .def_readonly("duration", &EventSpan::duration)
        .def("__eq__", [](const EventSpan& a, const EventSpan& b) { return a == b; })
        .def("__repr__", [](const EventSpan& s) {
            std::ostringstream os;
            os << "EventSpan(" << to_string(s.kind) << ", " << s.start << ", " << s.end << ")";
            return os.str();
        });

    py::class_<PipelineOptions>(m, "PipelineOptions")
        .def_readonly("fs", &PipelineOptions::fs)
        .def_readonly("units", &PipelineOptions::units)
        .def_readonly("screen_distance", &PipelineOptions::screen_distance)
        .def_readonly("velocity_threshold", &PipelineOptions::velocity_threshold)
        .def_readonly("velocity_window", &PipelineOptions::velocity_window)
        .def_readonly("min_blink_duration", &PipelineOptions::min_blink_duration)
        .def_readonly("pre_pad", &PipelineOptions::pre_pad)
        .def_readonly("post_pad", &PipelineOptions::post_pad)
        .def_readonly("cutoff", &PipelineOptions::cutoff)
        .def_readonly("blink_sd_multiplier", &PipelineOptions::blink_sd_multiplier)
        .def("__eq__", [](const PipelineOptions& a, const PipelineOptions& b) { return a == b; })
        .def("to_json", [](const PipelineOptions& o) { return options_to_json(o).dump(); });

    m.def("validate_options", &options_from_kwargs,
          "Build options from keyword parameters (fs and units required; CLI flag names, '_' for '-').");

    py::class_<Recording>(m, "Recording")
        .def(py::init(&recording_from_columns), py::arg("timestamps"), py::arg("x"), py::arg("y"),
             py::arg("pupil"), py::arg("fs"), py::arg("units"), py::arg("velocity_x") = py::none(),
             py::arg("velocity_y") = py::none())
        .def("__len__", &Recording::size)
        .def_property_readonly("fs", &Recording::fs)
        .def_property_readonly("units", &Recording::units)
        .def_property_readonly("has_velocity", &Recording::has_velocity)
        .def_property_readonly("timestamps", [](const Recording& r) { return to_list(r.timestamps()); })
        .def_property_readonly("x", [](const Recording& r) { return to_list(r.gaze_x()); })
        .def_property_readonly("y", [](const Recording& r) { return to_list(r.gaze_y()); })
        .def_property_readonly("pupil", [](const Recording& r) { return to_list(r.pupil()); })
        .def_property_readonly("column_names", &Recording::column_names)
        .def_property_readonly("timing_warning", &Recording::timing_warning);

    py::class_<AnnotatedFrame>(m, "AnnotatedFrame")
        .def_property_readonly("column_names",
                               [](const AnnotatedFrame& f) {
                                   std::vector<std::string> names;
                                   for (const auto& c : f.columns) names.push_back(c.name);
                                   return names;
                               })
        .def("column", [](const AnnotatedFrame& f, std::size_t i) { return f.columns.at(i).values; })
        .def_property_readonly("rows", &AnnotatedFrame::rows)
        .def_readonly("velocity_computed", &AnnotatedFrame::velocity_computed)
        .def_property_readonly("blink_index", &AnnotatedFrame::blink_index)
        .def_property_readonly("saccade_index", &AnnotatedFrame::saccade_index)
        .def_property_readonly("interpolated_index", &AnnotatedFrame::interpolated_index)
        .def_property_readonly("denoised_index", &AnnotatedFrame::denoised_index);

    py::class_<QualityReport>(m, "QualityReport")
        .def_property_readonly("n_blinks", &QualityReport::n_blinks)
        .def_readonly("blink_spans", &QualityReport::blink_spans)
        .def_property_readonly("n_saccades", &QualityReport::n_saccades)
        .def_readonly("saccade_spans", &QualityReport::saccade_spans)
        .def_readonly("n_missing_samples", &QualityReport::n_missing_samples)
        .def_readonly("fraction_interpolated", &QualityReport::fraction_interpolated)
        .def_property_readonly("mean_blink_duration_s", &QualityReport::mean_blink_duration_s)
        .def_readonly("peak_velocity_deg_s", &QualityReport::peak_velocity_deg_s)
        .def_readonly("parameters_used", &QualityReport::parameters_used);

    m.def("parse_recording", [](const std::string& csv, const PipelineOptions& o) { return parse_recording(csv, o); },
          py::arg("csv"), py::arg("options"));
    m.def("write_annotated", &write_annotated, py::arg("frame"));
    m.def("parse_annotated", [](const std::string& csv) { return parse_annotated(csv); }, py::arg("csv"));
    m.def("write_report", &write_report, py::arg("report"));

    m.def(
        "process",
        [](const Recording& r, const PipelineOptions& o) {
            auto result = process(r, o);
            return py::make_tuple(std::move(result.frame), std::move(result.report));
        },
        py::arg("recording"), py::arg("options"), "Run the full pipeline; returns (AnnotatedFrame, QualityReport).");

    m.def("detect_missing", [](const std::vector<double>& p, double fs) { return detect_missing(p, fs); },
          py::arg("pupil"), py::arg("fs"));
    m.def("blink_threshold", [](const std::vector<double>& p, double k) { return blink_threshold(p, k); },
          py::arg("pupil"), py::arg("sd_multiplier") = 3.0);
    m.def("detect_blinks", [](const std::vector<double>& p, const PipelineOptions& o) { return detect_blinks(p, o); },
          py::arg("pupil"), py::arg("options"));

    m.def(
        "visual_angle",
        [](std::array<double, 3> p, std::array<double, 3> q) {
            return visual_angle({p[0], p[1], p[2]}, {q[0], q[1], q[2]});
        },
        py::arg("p"), py::arg("q"), "Angle in degrees between two (x, y, z) gaze vectors.");
    m.def(
        "angular_velocity",
        [](const std::vector<double>& x, const std::vector<double>& y, double distance, double fs, int window) {
            return angular_velocity(x, y, distance, fs, window);
        },
        py::arg("x"), py::arg("y"), py::arg("distance"), py::arg("fs"), py::arg("window") = 5);
    m.def("detect_saccades", [](const std::vector<double>& v, const PipelineOptions& o) { return detect_saccades(v, o); },
          py::arg("velocity"), py::arg("options"));

    m.def("pad_spans", &pad_spans, py::arg("spans"), py::arg("options"), py::arg("length"));
    m.def("interpolate_linear", [](const std::vector<double>& p, const Spans& s) { return interpolate_linear(p, s); },
          py::arg("pupil"), py::arg("spans"));
    m.def("lowpass", [](const std::vector<double>& s, double fs, double cutoff) { return lowpass(s, fs, cutoff); },
          py::arg("series"), py::arg("fs"), py::arg("cutoff"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
