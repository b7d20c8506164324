#pragma once

#include <stdexcept>
#include <string>

namespace helibox {

// Configuration / usage problems (bad keys, out-of-range values, malformed files).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime faults during a solve (non-convergence, invalid state reached).
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// A positivity floor was crossed (density or internal energy). Carries the
// offending value and grid location in the message; aborts the run.
class FloorError : public SolverError {
public:
  explicit FloorError(const std::string& msg) : SolverError(msg) {}
};

} // namespace helibox
