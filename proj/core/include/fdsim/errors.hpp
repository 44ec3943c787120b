#pragma once

#include <stdexcept>
#include <string>

namespace fdsim {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// schedule() called with a timestamp behind the simulation clock.
struct SchedulingInPast : SimError {
  using SimError::SimError;
};

// Toeplitz key shorter than input length + window size.
struct KeyTooShort : SimError {
  using SimError::SimError;
};

// make_flows() would generate a source port above 65535.
struct PortOverflow : SimError {
  using SimError::SimError;
};

// Migration target outside the scenario's core set.
struct InvalidCore : SimError {
  using SimError::SimError;
};

// Ratio requested before any packet was delivered.
struct NoData : SimError {
  using SimError::SimError;
};

// Confidence interval requested with fewer than two samples.
struct InsufficientSamples : SimError {
  using SimError::SimError;
};

// Scenario file is syntactically malformed or contains unknown keys.
struct ParseError : SimError {
  ParseError(const std::string& what, int line_no)
      : SimError(what), line(line_no) {}
  int line;
};

// Scenario parsed but violates an invariant (named in the message).
struct ValidationError : SimError {
  ValidationError(const std::string& what, std::string field_name)
      : SimError(what), field(std::move(field_name)) {}
  std::string field;
};

}  // namespace fdsim
