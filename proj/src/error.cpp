#include "qnd/error.hpp"

namespace qnd {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IncompleteKraus: return "IncompleteKraus";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::GridTooCoarse: return "GridTooCoarse";
        case ErrorKind::MissingBasisLabel: return "MissingBasisLabel";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::EmptyCounts: return "EmptyCounts";
        case ErrorKind::MissingBasisCounts: return "MissingBasisCounts";
        case ErrorKind::StepUnstable: return "StepUnstable";
        case ErrorKind::WindowOutOfRange: return "WindowOutOfRange";
        case ErrorKind::UsageError: return "UsageError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace qnd
