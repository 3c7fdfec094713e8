#include "succmso/error.hpp"

namespace succmso {

std::string_view name(ErrorCode code) {
    switch (code) {
    case ErrorCode::kInputOutOfRange: return "InputOutOfRange";
    case ErrorCode::kBadParam: return "BadParam";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kTopologyError: return "TopologyError";
    case ErrorCode::kPortArityMismatch: return "PortArityMismatch";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kTooLargeToMaterialize: return "TooLargeToMaterialize";
    case ErrorCode::kScopeError: return "ScopeError";
    case ErrorCode::kTooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorCode::kEmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::kNotALeaf: return "NotALeaf";
    case ErrorCode::kBadAnchorBags: return "BadAnchorBags";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kBoundTooLarge: return "BoundTooLarge";
    case ErrorCode::kBadLiteral: return "BadLiteral";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kNotValidated: return "NotValidated";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kIoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::kParseError,
            (line > 0 ? "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " : std::string()) +
                message),
      line_(line), column_(column) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace succmso
