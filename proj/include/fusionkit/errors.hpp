#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit {

/// Input is not even well-formed (index out of range, negative multiplicity,
/// wrong shape). Distinct from an axiom failure, which is reported through a
/// ValidationReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. a commutator in a
/// noncommutative ring).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed on data that passed validation.
/// For valid inputs this is a theorem violation and signals corrupted data.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, long iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  long iterations() const { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;  // smallest witnessing index tuple
  std::string detail;
  double magnitude = 0.0;    // worst deviation, for floating-point checks
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  bool violates(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  const Violation* find(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }
};

namespace detail {

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

inline std::string tuple_string(const std::vector<int>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace detail
}  // namespace fusionkit
