#include <cmath>

#include "abelian/hypergeometric.hpp"
#include "abelian/uniformization.hpp"

namespace abelian {

namespace {

constexpr double kRootRadius = 0.95;

double cube_root_radius() { return std::pow(kRootRadius, -1.0 / 3.0); }

}  // namespace

bool u_lemniscatic_predicate(TauPoint tau, const TruncationPolicy& policy) {
  const Complex r = theta3(tau, policy) / theta2(tau, policy);
  return std::norm(r) * std::norm(r) <= kRootRadius;
}

Complex u_lemniscatic(TauPoint tau, const TruncationPolicy& policy) {
  const Complex r = theta3(tau, policy) / theta2(tau, policy);
  const Complex r2 = r * r;
  const Complex arg = r2 * r2;
  if (std::abs(arg) > kRootRadius) {
    throw DomainNotSupported("u_lemniscatic: |theta3^4/theta2^4| > 0.95");
  }
  return r * gauss_2f1(HypergeometricParams(0.5, 0.25, 1.25), arg, policy,
                       HypergeometricMethod::series);
}

bool u_equianharmonic_root_predicate(TauPoint tau, const TruncationPolicy& policy) {
  return std::abs(hauptmodul_equianharmonic(tau, policy)) >= cube_root_radius();
}

Complex u_equianharmonic_root(TauPoint tau, const TruncationPolicy& policy) {
  return wp_inverse_equianharmonic(hauptmodul_equianharmonic(tau, policy), policy);
}

bool u_equianharmonic_rootfree_predicate(TauPoint tau, const TruncationPolicy& policy) {
  return std::pow(std::abs(hauptmodul_equianharmonic(tau, policy)), 3) <= kRootRadius;
}

Complex u_equianharmonic_rootfree(TauPoint tau, const TruncationPolicy& policy) {
  const Complex z = hauptmodul_equianharmonic(tau, policy);
  const Complex z3 = z * z * z;
  if (std::abs(z3) > kRootRadius) {
    throw DomainNotSupported("u_equianharmonic_rootfree: |z|^3 > 0.95");
  }
  return u0_constant() + 0.5 * kI * z *
                             gauss_2f1(HypergeometricParams(0.5, 1.0 / 3.0, 4.0 / 3.0), z3,
                                       policy, HypergeometricMethod::series);
}

bool u_hyperelliptic_predicate(TauPoint tau, const TruncationPolicy& policy) {
  if (tau.im() / 2.0 < kMinImTau) return false;
  const Complex z = hauptmodul_hyperelliptic(tau, policy);
  return std::norm(z) * std::norm(z) <= kRootRadius;
}

Complex u_hyperelliptic(int m, TauPoint tau, const TruncationPolicy& policy) {
  if (m < 0 || m > 3) throw DomainError("u_hyperelliptic: m must be 0, 1, 2 or 3");
  if (tau.im() / 2.0 < kMinImTau) {
    throw DomainNotSupported("u_hyperelliptic: theta2(tau/2) needs Im(tau) >= 2e-2");
  }
  const Complex t2 = theta2(tau, policy);
  const Complex t3 = theta3(tau, policy);
  const Complex t2_half = theta2(TauPoint(tau.value() / 2.0), policy);
  const Complex z = t2 / t3;
  const Complex z2 = z * z;
  const Complex arg = z2 * z2;
  if (std::abs(arg) > kRootRadius) {
    throw DomainNotSupported("u_hyperelliptic: |theta2^4/theta3^4| > 0.95");
  }
  const double b = m / 4.0 + 1.0 / 8.0;
  const Complex prefactor = 2.0 * std::sqrt(2.0) * kI / (2.0 * m + 1.0);
  Complex ratio = t2 / t2_half;
  for (int j = 0; j < m; ++j) ratio *= z;
  return prefactor * ratio *
         gauss_2f1(HypergeometricParams(0.5, b, b + 1.0), arg, policy, HypergeometricMethod::series);
}

}  // namespace abelian
