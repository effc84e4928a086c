#pragma once

#include <stdexcept>
#include <string>

namespace uniformize {

/// Raised for invalid inputs: malformed graphs, violated preconditions,
/// hypothesis gates that a caller asked to be enforced.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uniformize
