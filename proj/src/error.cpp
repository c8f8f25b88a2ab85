#include "otde/error.hpp"

namespace otde {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedDataset: return "MalformedDataset";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::InvalidThresholds: return "InvalidThresholds";
    case ErrorKind::InsufficientHistory: return "InsufficientHistory";
    case ErrorKind::InvalidPrice: return "InvalidPrice";
    case ErrorKind::WindowTooLong: return "WindowTooLong";
    case ErrorKind::TooManyCoefficients: return "TooManyCoefficients";
    case ErrorKind::EmptyColumn: return "EmptyColumn";
    case ErrorKind::NotEnoughData: return "NotEnoughData";
    case ErrorKind::OutOfSpace: return "OutOfSpace";
    case ErrorKind::SingularKernel: return "SingularKernel";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::IncompleteGrid: return "IncompleteGrid";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace otde
