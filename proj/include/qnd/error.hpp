#pragma once

#include <stdexcept>
#include <string>

namespace qnd {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    InvalidState,
    LengthMismatch,
    DimensionMismatch,
    IncompleteKraus,
    Degenerate,
    GridTooCoarse,
    MissingBasisLabel,
    DimensionTooLarge,
    EmptyCounts,
    MissingBasisCounts,
    StepUnstable,
    WindowOutOfRange,
    UsageError,
    ParseError,
    IoError,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qnd
