#pragma once

#include <stdexcept>
#include <string>

namespace ihara {

// Malformed input: unreadable files, out-of-range vertex ids, bad parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The graph is well formed but violates an assumption of the requested
// formula (non-simple, degree-1 vertex, not regular, ...). Callers that
// orchestrate several checks treat these as "not applicable" rather than
// as verification failures.
class AssumptionError : public std::domain_error {
 public:
  enum class Kind { not_simple, degree_too_small, not_regular, not_connected };

  AssumptionError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Enumeration work estimate exceeds the configured budget.
class WorkCapError : public std::runtime_error {
 public:
  WorkCapError(double estimated, double cap, const std::string& what)
      : std::runtime_error(what), estimated_(estimated), cap_(cap) {}

  double estimated_work() const { return estimated_; }
  double work_cap() const { return cap_; }

 private:
  double estimated_;
  double cap_;
};

}  // namespace ihara
