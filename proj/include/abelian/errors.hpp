#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace abelian {

/// Base of every error raised by the library. `kind()` is a stable name
/// ("DomainError", "PoleError", ...) that the CLI prints and tests match on.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Argument violates a documented precondition (pole of Gamma, Im(tau) <= 0,
/// wrong parameter range, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

/// Argument is mathematically valid but outside the region where the
/// implemented representation is evaluated (series/Pfaff disk, validated
/// sigma disk, convergence predicates).
class DomainNotSupported : public Error {
 public:
  explicit DomainNotSupported(const std::string& message)
      : Error("DomainNotSupported", message) {}
};

/// A truncated series or adaptive quadrature did not reach its target.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& message, std::complex<double> best_estimate = {},
                double error_bound = 0.0)
      : Error("AccuracyError", message), best_estimate_(best_estimate), error_bound_(error_bound) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  std::complex<double> best_estimate_;
  double error_bound_;
};

/// Evaluation at (or numerically at) a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& message, std::complex<double> location)
      : Error("PoleError", message), location_(location) {}

  std::complex<double> location() const noexcept { return location_; }

 private:
  std::complex<double> location_;
};

/// f'(tau0) vanishes numerically, so the bracket Schwarzian is undefined.
class CriticalPointError : public Error {
 public:
  explicit CriticalPointError(const std::string& message)
      : Error("CriticalPointError", message) {}
};

/// A user-supplied function returned a non-finite value.
class EvaluationError : public Error {
 public:
  explicit EvaluationError(const std::string& message) : Error("EvaluationError", message) {}
};

}  // namespace abelian
