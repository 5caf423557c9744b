#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratolink {

/// Argument outside the mathematical or physical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A fitted model was asked for a value outside the range it supports.
class UnsupportedRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative numerical method stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double error_estimate, std::size_t work);

    /// Error estimate achieved when the method gave up.
    double error_estimate() const noexcept { return error_estimate_; }
    /// Function evaluations or series terms spent.
    std::size_t work() const noexcept { return work_; }

private:
    double error_estimate_;
    std::size_t work_;
};

namespace detail {
[[noreturn]] void throw_domain(const std::string& message);
}

/// Throws DomainError carrying `message` unless `condition` holds.
inline void require(bool condition, const char* message)
{
    if (!condition) {
        detail::throw_domain(message);
    }
}

}  // namespace stratolink
