#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pupils {

enum class ErrorKind {
    MissingRequired,
    InvalidValue,
    BadColumnCount,
    NonMonotonicTime,
    EmptyInput,
    UnparsableCell,
    InsufficientValidData,
    RecordingTooShort,
    AllDataMissing,
    CutoffOutOfRange,
    SeriesTooShort,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library. `kind()` is the machine-readable
/// category; `stage()` is set by the pipeline when a stage fails.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string stage = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& stage() const noexcept { return stage_; }
    const std::string& detail() const noexcept { return detail_; }

    Error with_stage(std::string stage) const { return Error(kind_, detail_, std::move(stage)); }

private:
    ErrorKind kind_;
    std::string stage_;
    std::string detail_;
};

}  // namespace pupils
