#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvemass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration would visit more elements than the configured budget allows.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t budget)
      : Error("enumeration budget exceeded: " + std::to_string(requested) + " elements requested, budget is " +
              std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

/// The curve model has a singular point; the message names a witness.
class SingularModel : public Error {
 public:
  using Error::Error;
};

/// Point counts or zeta data that violate an identity they must satisfy.
class InconsistentCounts : public Error {
 public:
  using Error::Error;
};

class WeilViolation : public Error {
 public:
  WeilViolation(unsigned m, const std::string& detail)
      : Error("Weil bound violated at m = " + std::to_string(m) + ": " + detail), m_(m) {}
  unsigned m() const noexcept { return m_; }

 private:
  unsigned m_;
};

class MalformedGroup : public Error {
 public:
  using Error::Error;
};

/// A lattice sum that should converge geometrically does not.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvemass
