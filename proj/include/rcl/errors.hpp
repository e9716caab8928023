#pragma once

#include <stdexcept>
#include <string>

namespace rcl {

struct LatticeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSuchRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularCoordinates : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive step controller could not meet the tolerance; carries the last
// good time so callers can report how far the integration got.
struct StepFailure : std::runtime_error {
  double t_reached;
  StepFailure(const std::string& msg, double t) : std::runtime_error(msg), t_reached(t) {}
};

struct FitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoxTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rcl
