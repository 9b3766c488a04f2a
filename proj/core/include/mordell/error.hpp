#pragma once

#include <stdexcept>
#include <string>

namespace mordell {

/// Raised when a caller violates an operation's documented precondition.
/// The CLI maps this to exit status 2.
class PreconditionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric routine could not certify its own result (e.g. a rounded
/// class number that is not close to an integer).
class PrecisionError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, std::string const & what)
{
    if (!ok)
        throw PreconditionError(what);
}

} // namespace mordell
