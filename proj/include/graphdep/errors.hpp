#pragma once

#include <stdexcept>
#include <string>

namespace graphdep {

/// Malformed or out-of-contract input (bad file, self-loop, length mismatch).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but exceeds an enumeration or support cap.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural precondition failed: a part is not a forest, a graph is not a
/// tree, a joint is not dependent on the declared graph, ...
class KindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that the mathematics rules out happened anyway.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphdep
