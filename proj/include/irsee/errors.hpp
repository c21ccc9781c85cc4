#pragma once

#include <stdexcept>
#include <string>

namespace irsee {

/// A series or continued fraction failed to converge within the term budget.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The objective is saturated at 1 over the whole feasible interval.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No element count up to the given cap meets the requested outage target.
struct NotAchievableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed experiment configuration (CLI flags or config file).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace irsee
