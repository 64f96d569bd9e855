#ifndef BORELKIT_ERRORS_HPP
#define BORELKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borelkit {

/// Raised for malformed or out-of-domain input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace borelkit

#endif  // BORELKIT_ERRORS_HPP
