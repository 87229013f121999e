#include "pupils/cli.hpp"

#include "pupils/error.hpp"
#include "pupils/io.hpp"
#include "pupils/options.hpp"
#include "pupils/pipeline.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace pupils {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("error while reading '" + path + "'");
    return ss.str();
}

/// Writes every file to a temporary sibling first and renames them only once
/// all writes succeeded.
class AtomicWriter {
public:
    ~AtomicWriter() {
        for (const auto& [tmp, _] : pending_) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
        }
    }

    void stage(const std::string& path, const std::string& contents) {
        const std::string tmp = path + ".tmp." + std::to_string(::getpid());
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open '" + tmp + "' for writing");
        pending_.emplace_back(tmp, path);
        out << contents;
        out.close();
        if (!out) throw IoFailure("error while writing '" + tmp + "'");
    }

    void commit() {
        for (const auto& [tmp, path] : pending_) {
            std::error_code ec;
            std::filesystem::rename(tmp, path, ec);
            if (ec) throw IoFailure("cannot move output into '" + path + "': " + ec.message());
        }
        pending_.clear();
    }

private:
    std::vector<std::pair<std::string, std::string>> pending_;
};

struct ParamFlag {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr ParamFlag kParamFlags[] = {
    {"--fs", "fs", "Sampling frequency in Hz (required)"},
    {"--units", "units", "Gaze coordinate units: px, cm or mm (required)"},
    {"--distance", "distance", "Head-to-screen distance, in gaze units (required)"},
    {"--velocity-threshold", "velocity-threshold", "Saccade velocity threshold in deg/s (default 30)"},
    {"--velocity-window", "velocity-window", "Velocity window in samples (default 5)"},
    {"--min-blink-ms", "min-blink-ms", "Minimum blink duration in ms (default 30)"},
    {"--pre-ms", "pre-ms", "Interpolation padding before gaps in ms (default 50)"},
    {"--post-ms", "post-ms", "Interpolation padding after gaps in ms (default 150)"},
    {"--cutoff-hz", "cutoff-hz", "Low-pass cutoff in Hz (default 10)"},
    {"--blink-sd-multiplier", "blink-sd-multiplier", "Blink threshold in SDs below the mean (default 3)"},
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pupillometry preprocessing: blink and saccade detection, gap interpolation, low-pass denoising.",
                 "pupils"};
    app.set_version_flag("--version", std::string("pupils ") + kVersion);

    std::string input, output, report_path, config_path;
    app.add_option("-i,--input", input, "Input CSV (time, x, y, pupil[, vx, vy])")->required();
    app.add_option("-o,--output", output, "Annotated output CSV")->required();
    app.add_option("--report", report_path, "Quality report JSON");
    app.add_option("--config", config_path, "JSON file with parameters (flags take precedence)");

    std::vector<std::string> values(std::size(kParamFlags));
    std::vector<CLI::Option*> param_opts;
    for (std::size_t i = 0; i < std::size(kParamFlags); ++i)
        param_opts.push_back(app.add_option(kParamFlags[i].flag, values[i], kParamFlags[i].help));

    std::vector<const char*> argv;
    argv.push_back("pupils");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        nlohmann::json raw = nlohmann::json::object();
        if (!config_path.empty()) {
            const auto text = read_file(config_path);
            try {
                raw = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                err << "error: config '" << config_path << "' is not valid JSON: " << e.what() << "\n";
                return kExitValidation;
            }
            if (!raw.is_object()) {
                err << "error: config '" << config_path << "' must contain a JSON object\n";
                return kExitValidation;
            }
        }
        for (std::size_t i = 0; i < param_opts.size(); ++i) {
            if (param_opts[i]->count() == 0) continue;
            // Drop any config spelling of the same key before overriding.
            for (auto it = raw.begin(); it != raw.end();) {
                if (canonical_option_key(it.key()) == kParamFlags[i].key) it = raw.erase(it);
                else ++it;
            }
            raw[kParamFlags[i].key] = values[i];
        }

        PipelineOptions options;
        try {
            options = validate_options(raw);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::MissingRequired) {
                const std::string flag = raw.contains("fs") ? "--units" : "--fs";
                err << "error: missing required option " << flag << " (" << e.detail() << ")\n";
            } else {
                err << "error: " << e.what() << "\n";
            }
            return kExitValidation;
        }
        if (!options.screen_distance) {
            err << "error: missing required option --distance (head-to-screen distance, in gaze units)\n";
            return kExitValidation;
        }

        const auto csv = read_file(input);
        const auto recording = parse_recording(csv, options);
        if (const auto& warning = recording.timing_warning()) err << "warning: " << *warning << "\n";

        const auto result = process(recording, options);

        AtomicWriter writer;
        writer.stage(output, write_annotated(result.frame));
        if (!report_path.empty()) writer.stage(report_path, write_report(result.report));
        writer.commit();
        return kExitOk;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace pupils
