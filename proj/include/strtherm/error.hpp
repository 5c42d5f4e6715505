#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strtherm {

enum class ErrorCode {
    EmptyInput,
    InvalidLength,
    InvalidShift,
    InvalidEnsembleSize,
    PairTooLarge,
    DegenerateModel,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace strtherm
