#include <doctest.h>

#include "pupils/cli.hpp"
#include "pupils/io.hpp"
#include "synth.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace pupils;
using namespace pupils::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pupils_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string sample_csv(std::size_t n, double fs) {
    std::ostringstream os;
    os << "time,x,y,pupil\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double p = (i >= n / 2 && i < n / 2 + 50) ? 1.0 : 5.0 + 0.01 * std::sin(0.3 * static_cast<double>(i));
        os << static_cast<double>(i) / fs << "," << 10 + 0.001 * static_cast<double>(i % 7) << ",-4," << p << "\n";
    }
    return os.str();
}

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("happy path writes both outputs") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(2000, 500));
    const auto r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("in.csv"), "-o",
                        dir.file("out.csv"), "--report", dir.file("rep.json")});
    INFO(r.err);
    REQUIRE(r.code == kExitOk);
    const auto frame = parse_annotated(slurp(dir.file("out.csv")));
    CHECK(frame.rows() == 2000);
    CHECK(frame.columns.size() == 9);
    const auto report = nlohmann::json::parse(slurp(dir.file("rep.json")));
    CHECK(report["n_blinks"] == 1);
    CHECK(report["parameters_used"]["fs"] == 500.0);
    CHECK(report["parameters_used"]["units"] == "mm");
    for (const auto& entry : fs::directory_iterator(dir.path))
        CHECK(entry.path().filename().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("report is optional") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(500, 500));
    const auto r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("in.csv"), "-o",
                        dir.file("out.csv")});
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(dir.file("out.csv")));
}

TEST_CASE("missing required parameters name the flag") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(500, 500));
    const std::string in = dir.file("in.csv"), out = dir.file("out.csv");

    auto r = cli({"--units", "mm", "--distance", "600", "-i", in, "-o", out});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("--fs") != std::string::npos);

    r = cli({"--fs", "500", "--distance", "600", "-i", in, "-o", out});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("--units") != std::string::npos);

    r = cli({"--fs", "500", "--units", "mm", "-i", in, "-o", out});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("--distance") != std::string::npos);

    r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-o", out});
    CHECK(r.code == kExitValidation);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("config file with flag precedence") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(2000, 500));
    write_text(dir.file("cfg.json"),
               R"({"fs": 500, "units": "mm", "distance": 600, "velocity-threshold": 45, "pre_pad": 20})");
    const auto r = cli({"--config", dir.file("cfg.json"), "--velocity-threshold", "60", "-i", dir.file("in.csv"),
                        "-o", dir.file("out.csv"), "--report", dir.file("rep.json")});
    INFO(r.err);
    REQUIRE(r.code == kExitOk);
    const auto params = nlohmann::json::parse(slurp(dir.file("rep.json")))["parameters_used"];
    CHECK(params["velocity-threshold"] == 60.0);
    CHECK(params["pre-ms"] == 20.0);
    CHECK(params["post-ms"] == 150.0);
    CHECK(params["distance"] == 600.0);
}

TEST_CASE("bad config and bad values are validation errors") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(500, 500));
    write_text(dir.file("cfg.json"), "{not json");
    const std::string in = dir.file("in.csv"), out = dir.file("out.csv");
    CHECK(cli({"--config", dir.file("cfg.json"), "-i", in, "-o", out}).code == kExitValidation);
    CHECK(cli({"--fs", "-5", "--units", "mm", "--distance", "600", "-i", in, "-o", out}).code == kExitValidation);
    CHECK(cli({"--fs", "500", "--units", "furlongs", "--distance", "600", "-i", in, "-o", out}).code ==
          kExitValidation);
    CHECK(cli({"--fs", "500", "--units", "mm", "--distance", "600", "--cutoff-hz", "300", "-i", in, "-o", out})
              .code == kExitValidation);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("malformed input is a validation error") {
    TempDir dir;
    write_text(dir.file("in.csv"), "time,x,y,pupil\n0,1,2,3\n0.002,1,2\n");
    const auto r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("in.csv"), "-o",
                        dir.file("out.csv")});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("BadColumnCount") != std::string::npos);
    CHECK_FALSE(fs::exists(dir.file("out.csv")));
}

TEST_CASE("I/O failures exit 2 without partial outputs") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(500, 500));
    auto r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("absent.csv"), "-o",
                  dir.file("out.csv")});
    CHECK(r.code == kExitIo);
    CHECK_FALSE(fs::exists(dir.file("out.csv")));

    // Report directory does not exist: the CSV must not appear either.
    r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("in.csv"), "-o", dir.file("out.csv"),
             "--report", dir.file("nowhere/rep.json")});
    CHECK(r.code == kExitIo);
    CHECK_FALSE(fs::exists(dir.file("out.csv")));
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
    CHECK(files == 1);
}

TEST_CASE("help and version") {
    auto r = cli({"--version"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(kVersion) != std::string::npos);
    r = cli({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--velocity-threshold") != std::string::npos);
    CHECK(r.out.find("--cutoff-hz") != std::string::npos);
}

TEST_CASE("timing mismatch warns but succeeds") {
    TempDir dir;
    write_text(dir.file("in.csv"), sample_csv(1000, 250));
    const auto r = cli({"--fs", "500", "--units", "mm", "--distance", "600", "-i", dir.file("in.csv"), "-o",
                        dir.file("out.csv")});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("warning") != std::string::npos);
}
