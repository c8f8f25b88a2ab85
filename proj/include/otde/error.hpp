#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace otde {

enum class ErrorKind {
    InvalidArgument,
    MalformedDataset,
    UnknownLabel,
    DegenerateRange,
    InvalidThresholds,
    InsufficientHistory,
    InvalidPrice,
    WindowTooLong,
    TooManyCoefficients,
    EmptyColumn,
    NotEnoughData,
    OutOfSpace,
    SingularKernel,
    ShapeMismatch,
    LengthMismatch,
    LabelOutOfRange,
    IncompleteGrid,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/** Every failure raised by the library carries one of the ErrorKind tags. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace otde
