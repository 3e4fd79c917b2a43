#pragma once

#include <stdexcept>
#include <string>

namespace mjsing {

/// Base class for every error raised by the library. The message is the
/// contract: callers and tests match on it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when Buchberger's algorithm exceeds the configured step budget.
/// Classifiers map this to an INCONCLUSIVE verdict, never to a guess.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace mjsing
