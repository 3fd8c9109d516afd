#include <cmath>
#include <string>

#include "abelian/hypergeometric.hpp"

namespace abelian {

HypergeometricParams::HypergeometricParams(Complex a_, Complex b_, Complex c_)
    : a(a_), b(b_), c(c_) {
  if (c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real())) {
    throw DomainError("2F1: c must not be zero or a negative integer");
  }
}

namespace {

Complex power_series(const HypergeometricParams& p, Complex z, const TruncationPolicy& policy) {
  Complex sum{1.0, 0.0};
  Complex term{1.0, 0.0};
  int small_in_a_row = 0;
  for (int n = 0; n < policy.max_terms; ++n) {
    const double k = n;
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) < policy.rel_tol * std::abs(sum)) {
      if (++small_in_a_row == 2) return require_finite(sum, "gauss_2f1");
    } else {
      small_in_a_row = 0;
    }
  }
  throw AccuracyError("gauss_2f1: truncation policy max_terms exceeded", sum);
}

Complex pfaff(const HypergeometricParams& p, Complex z, const TruncationPolicy& policy) {
  const Complex w = z / (z - 1.0);
  return principal_power(1.0 - z, -p.a) *
         power_series(HypergeometricParams(p.a, p.c - p.b, p.c), w, policy);
}

}  // namespace

Complex gauss_2f1(const HypergeometricParams& p, Complex z, const TruncationPolicy& policy,
                  HypergeometricMethod method) {
  if (!is_finite(z)) throw DomainError("gauss_2f1: non-finite argument");
  switch (method) {
    case HypergeometricMethod::series:
      if (std::abs(z) > kHypergeometricRadius) {
        throw DomainNotSupported("gauss_2f1: |z| > 0.95 for the power series");
      }
      return power_series(p, z, policy);
    case HypergeometricMethod::pfaff:
      if (z == Complex{1.0, 0.0} || std::abs(z / (z - 1.0)) > kHypergeometricRadius) {
        throw DomainNotSupported("gauss_2f1: |z/(z-1)| > 0.95 for the Pfaff form");
      }
      return pfaff(p, z, policy);
    case HypergeometricMethod::automatic:
      break;
  }
  if (std::abs(z) <= kHypergeometricRadius) return power_series(p, z, policy);
  if (z != Complex{1.0, 0.0} && std::abs(z / (z - 1.0)) <= kHypergeometricRadius) {
    return pfaff(p, z, policy);
  }
  throw DomainNotSupported("gauss_2f1: argument outside both the series and Pfaff disks");
}

}  // namespace abelian
