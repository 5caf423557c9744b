#include "stratolink/errors.hpp"

#include <sstream>

namespace stratolink {

namespace {
std::string with_estimate(const std::string& what, double error_estimate, std::size_t work)
{
    std::ostringstream out;
    out << what << " (error estimate " << error_estimate << " after " << work << " evaluations)";
    return out.str();
}
}  // namespace

ConvergenceError::ConvergenceError(const std::string& what, double error_estimate, std::size_t work)
    : std::runtime_error(with_estimate(what, error_estimate, work)),
      error_estimate_(error_estimate),
      work_(work)
{
}

namespace detail {
void throw_domain(const std::string& message)
{
    throw DomainError(message);
}
}  // namespace detail

}  // namespace stratolink
