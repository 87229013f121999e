#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pupils {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitIo = 2,
};

/**
 * Command-line entry point (arguments exclude the program name).
 *
 *     pupils --fs 500 --units mm --distance 600 -i in.csv -o out.csv --report rep.json
 *
 * Parameters are resolved as flags > --config JSON > defaults. Outputs are
 * written to temporary files and renamed into place only after the whole
 * run succeeded. Diagnostics go to `err`; --help/--version go to `out`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pupils
