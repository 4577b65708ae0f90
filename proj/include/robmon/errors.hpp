#pragma once

#include <stdexcept>
#include <string>

namespace robmon {

// Bad user input: malformed data, inconsistent configuration, out-of-range
// tuning values. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The estimator could not produce a fit (all starts degenerate, no
// bracketable scale, singular subsets). Maps to CLI exit code 2.
class EstimationError : public std::runtime_error {
 public:
  explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge or lost its bracket.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace robmon
