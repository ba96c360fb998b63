#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurpath {

enum class ErrorCode {
    // core
    NotWeaklyDecreasing,
    NegativePart,
    RowsTooSmall,
    NotStrictlyDecreasing,
    NegativeResultingPart,
    EmptyPartition,
    RowOutOfRange,
    BoxNumberOutOfRange,
    StripDoesNotFit,
    ConstraintViolated,
    NotContained,
    // tableaux
    RowViolation,
    ColumnViolation,
    EntryOutOfRange,
    ShapeMismatch,
    // paths
    MalformedFamily,
    // overlay
    LevelMismatch,
    OddColouredCount,
    NotColouredPoint,
    PathNotInOverlay,
    NotAdmissibleConfiguration,
    // polynomials
    VariableCountMismatch,
    // identities
    NotAlternating,
    EmptyS,
    SNotInward,
    // io
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace schurpath
