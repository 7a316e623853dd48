#pragma once

#include <stdexcept>
#include <string>

namespace wcw {

/// Malformed graph, weight, CNF or sidecar text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential enumeration hit its budget. The computation was abandoned,
/// so no verdict is available (as opposed to a negative one).
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wcw
