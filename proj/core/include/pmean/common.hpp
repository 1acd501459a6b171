#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmean {

// Absolute slack used for every welfare and threshold comparison. A
// threshold tau is considered met when value >= tau - kEpsilon.
inline constexpr double kEpsilon = 1e-9;

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumerating routine was asked to work past its declared size cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed the configured state budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An algorithm hypothesis did not hold on the given input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class BracketInvalid : public Error {
 public:
  using Error::Error;
};

class NotPerfect : public Error {
 public:
  using Error::Error;
};

// Malformed arguments or input files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Cap on the number of states a brute-force enumeration may visit.
struct Budget {
  static constexpr std::uint64_t kDefaultMaxStates = 10'000'000;
  std::uint64_t max_states = kDefaultMaxStates;
};

// base^exp, saturating at UINT64_MAX instead of overflowing.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

// Throws BudgetExceeded unless n^m <= budget.max_states.
void require_partition_budget(unsigned n, unsigned m, const Budget& budget);

}  // namespace pmean
