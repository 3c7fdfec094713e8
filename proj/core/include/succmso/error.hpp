#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace succmso {

/// Error names surfaced by the library. The CLI prints `name(code)` verbatim,
/// so the spelling of these names is part of the command-line contract.
enum class ErrorCode {
    kInputOutOfRange,
    kBadParam,
    kParseError,
    kTopologyError,
    kPortArityMismatch,
    kEmptyWord,
    kBadVertex,
    kTooLarge,
    kLabelOutOfRange,
    kTooLargeToMaterialize,
    kScopeError,
    kTooLargeForBruteForce,
    kEmptyDecomposition,
    kNotALeaf,
    kBadAnchorBags,
    kInvalidDecomposition,
    kEmptyGraph,
    kBoundTooLarge,
    kBadLiteral,
    kIndexOutOfRange,
    kValidationError,
    kNotValidated,
    kConstructionFailed,
    kInvalidGraph,
    kIoError,
};

std::string_view name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Parse failure with a 1-based line and column (0 when unknown).
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace succmso
