#pragma once

#include "abelian/complex.hpp"
#include "abelian/numerics.hpp"

namespace abelian {

/// Parameters (a, b; c) of 2F1. c must not be zero or a negative integer.
struct HypergeometricParams {
  Complex a;
  Complex b;
  Complex c;

  HypergeometricParams(Complex a_, Complex b_, Complex c_);
};

/// |z| bound of the disk on which the power series (or, after the Pfaff
/// transformation, its image z/(z-1)) is summed.
inline constexpr double kHypergeometricRadius = 0.95;

enum class HypergeometricMethod { automatic, series, pfaff };

/// Gauss 2F1(a, b; c | z).
///
/// automatic: the power series when |z| <= 0.95, otherwise the Pfaff form
/// (1-z)^(-a) 2F1(a, c-b; c | z/(z-1)) when |z/(z-1)| <= 0.95. Anything else
/// raises DomainNotSupported; there is no further analytic continuation.
Complex gauss_2f1(const HypergeometricParams& p, Complex z, const TruncationPolicy& policy = {},
                  HypergeometricMethod method = HypergeometricMethod::automatic);

Complex gamma_fn(Complex z);

/// Gamma(a) Gamma(b) / Gamma(a + b).
Complex euler_beta(Complex a, Complex b);

/// Complete integral K(k) = F(1; k), modulus convention, by the AGM.
Complex elliptic_K(Complex k);

/// Legendre incomplete integral F(x; k) = int_0^x dt / sqrt((1-t^2)(1-k^2 t^2))
/// along the segment [0, x]; x is the sine of the amplitude. F(+-1; k) = +-K(k).
Complex elliptic_F(Complex x, Complex k);

enum class IntegralBase { from_zero, from_infinity };

/// int_base^z u^(alpha-1) (u^n - 1)^(-beta) du.
///
/// Branch convention. from_zero: (u^n - 1)^(-beta) means
/// exp(i pi beta) (1 - u^n)^(-beta) with the principal power, i.e. the value
/// reached from below the cut on (0, 1); this is the branch that makes the
/// exp(i pi beta) prefactor of the closed form correct. from_infinity: the
/// principal value for real u > 1, continued along the ray from infinity.
struct IncompleteIntegralSpec {
  Complex alpha;
  Complex beta;
  int n = 1;
  Complex z;
  IntegralBase base = IntegralBase::from_zero;

  /// Throws DomainError on n < 1, Re(alpha) <= 0 (from_zero) or
  /// Re(n beta - alpha) <= 0 (from_infinity).
  void validate() const;
};

/// Closed form through 2F1:
///   from_zero:     exp(i pi beta)/alpha z^alpha 2F1(beta, alpha/n; alpha/n + 1 | z^n)
///   from_infinity: z^(alpha - n beta)/(alpha - n beta)
///                  2F1(beta, beta - alpha/n; beta - alpha/n + 1 | z^-n)
Complex incomplete_integral_2f1(const IncompleteIntegralSpec& spec,
                                const TruncationPolicy& policy = {});

/// Straight path used by the oracle: [0, z] for from_zero; for from_infinity
/// the integral is rewritten with u = 1/v (see oracle_incomplete_integral)
/// and the path is [0, 1/z] in the v-plane.
Polyline default_oracle_path(const IncompleteIntegralSpec& spec);

/// Brute-force value of the same integral by contour quadrature.
/// from_zero integrates exp(i pi beta) u^(alpha-1) (1-u^n)^(-beta) along
/// `path` (0 -> z); from_infinity integrates -v^(n beta - alpha - 1)
/// (1-v^n)^(-beta) along `path` (0 -> 1/z).
Complex oracle_incomplete_integral(const IncompleteIntegralSpec& spec, const Polyline& path,
                                   double tol = 1e-12);

inline Complex oracle_incomplete_integral(const IncompleteIntegralSpec& spec) {
  return oracle_incomplete_integral(spec, default_oracle_path(spec));
}

}  // namespace abelian
