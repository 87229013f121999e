#include "pupils/error.hpp"

namespace pupils {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingRequired: return "MissingRequired";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::BadColumnCount: return "BadColumnCount";
        case ErrorKind::NonMonotonicTime: return "NonMonotonicTime";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::UnparsableCell: return "UnparsableCell";
        case ErrorKind::InsufficientValidData: return "InsufficientValidData";
        case ErrorKind::RecordingTooShort: return "RecordingTooShort";
        case ErrorKind::AllDataMissing: return "AllDataMissing";
        case ErrorKind::CutoffOutOfRange: return "CutoffOutOfRange";
        case ErrorKind::SeriesTooShort: return "SeriesTooShort";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& detail, const std::string& stage) {
    std::string out;
    if (!stage.empty()) {
        out += stage;
        out += ": ";
    }
    out += to_string(kind);
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::string stage)
    : std::runtime_error(format_message(kind, message, stage)),
      kind_(kind),
      stage_(std::move(stage)),
      detail_(message) {}

}  // namespace pupils
