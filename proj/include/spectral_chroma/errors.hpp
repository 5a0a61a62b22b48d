#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral_chroma {

/// Malformed textual input. `position()` is a byte offset (graph6) or a
/// 1-based line number (edge lists); `what()` says which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request exceeds a hard size limit; no answer is attempted.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spectral_chroma
