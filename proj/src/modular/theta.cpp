#include <cmath>
#include <string>

#include "abelian/modular.hpp"

namespace abelian {

TauPoint::TauPoint(Complex value) : value_(value) {
  if (!is_finite(value) || !(value.imag() > 0.0)) {
    throw DomainError("tau must lie in the upper half-plane");
  }
}

namespace {

void require_supported(TauPoint tau, const char* name) {
  if (tau.im() < kMinImTau) {
    throw AccuracyError(std::string(name) + ": Im(tau) below the supported minimum 1e-2");
  }
}

// Accumulates `term(k)` for k = 1, 2, ... onto `sum` until two consecutive
// terms fall below policy.rel_tol * |sum|.
template <typename Term>
Complex sum_outward(Complex sum, Term term, const TruncationPolicy& policy, const char* name) {
  int small_in_a_row = 0;
  for (int k = 1; k <= policy.max_terms; ++k) {
    const Complex t = term(k);
    sum += t;
    if (std::abs(t) < policy.rel_tol * std::abs(sum)) {
      if (++small_in_a_row == 2) return require_finite(sum, name);
    } else {
      small_in_a_row = 0;
    }
  }
  throw AccuracyError(std::string(name) + ": truncation policy max_terms exceeded", sum);
}

// exp(i pi tau m) for integer m.
Complex nome_power(Complex tau, double m) { return std::exp(kI * kPi * tau * m); }

}  // namespace

Complex theta2(TauPoint tau, const TruncationPolicy& policy) {
  require_supported(tau, "theta2");
  const Complex t = tau.value();
  // Symmetric pairs k and -1-k contribute equally; k = 0 gives the first.
  const Complex s = sum_outward(
      Complex{1.0, 0.0}, [&](int k) { return nome_power(t, double(k) * (k + 1)); }, policy,
      "theta2");
  return 2.0 * std::exp(kI * kPi * t / 4.0) * s;
}

Complex theta3(TauPoint tau, const TruncationPolicy& policy) {
  require_supported(tau, "theta3");
  const Complex t = tau.value();
  return sum_outward(
      Complex{1.0, 0.0}, [&](int k) { return 2.0 * nome_power(t, double(k) * k); }, policy,
      "theta3");
}

Complex theta4(TauPoint tau, const TruncationPolicy& policy) {
  require_supported(tau, "theta4");
  const Complex t = tau.value();
  return sum_outward(
      Complex{1.0, 0.0},
      [&](int k) { return (k % 2 == 0 ? 2.0 : -2.0) * nome_power(t, double(k) * k); }, policy,
      "theta4");
}

Complex dedekind_eta(TauPoint tau, const TruncationPolicy& policy) {
  require_supported(tau, "dedekind_eta");
  const Complex t = tau.value();
  // Euler: prod (1 - x^k) = sum_n (-1)^n x^(n(3n-1)/2), x = exp(2 pi i tau).
  const Complex s = sum_outward(
      Complex{1.0, 0.0},
      [&](int n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double lo = 0.5 * n * (3.0 * n - 1.0);
        const double hi = 0.5 * n * (3.0 * n + 1.0);
        return sign * (nome_power(t, 2.0 * lo) + nome_power(t, 2.0 * hi));
      },
      policy, "dedekind_eta");
  return std::exp(kI * kPi * t / 12.0) * s;
}

}  // namespace abelian
