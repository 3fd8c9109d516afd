#pragma once

#include "abelian/complex.hpp"
#include "abelian/numerics.hpp"

namespace abelian {

/// Smallest Im(tau) at which the q-series are evaluated. Below this the
/// theta and eta functions raise AccuracyError; there is no modular
/// transformation fallback.
inline constexpr double kMinImTau = 1e-2;

/// A point of the upper half-plane.
class TauPoint {
 public:
  /// Throws DomainError unless Im(value) > 0.
  explicit TauPoint(Complex value);

  Complex value() const noexcept { return value_; }
  double re() const noexcept { return value_.real(); }
  double im() const noexcept { return value_.imag(); }

 private:
  Complex value_;
};

// Jacobi theta constants in the nome q = exp(i pi tau):
//   theta2 = exp(i pi tau / 4) sum_k q^(k^2 + k)
//   theta3 = sum_k q^(k^2),  theta4 = sum_k (-1)^k q^(k^2)
Complex theta2(TauPoint tau, const TruncationPolicy& policy = {});
Complex theta3(TauPoint tau, const TruncationPolicy& policy = {});
Complex theta4(TauPoint tau, const TruncationPolicy& policy = {});

/// Dedekind eta, exp(i pi tau / 12) prod_k (1 - exp(2 pi i k tau)), summed
/// through Euler's pentagonal-number series.
Complex dedekind_eta(TauPoint tau, const TruncationPolicy& policy = {});

/// theta2^2 / theta3^2.
Complex hauptmodul_lemniscatic(TauPoint tau, const TruncationPolicy& policy = {});

/// 9 eta(9 tau)^3 / eta(tau)^3, the cusp-normalised part of the equianharmonic
/// Hauptmodul. Kept separate so callers that only need derivatives avoid the
/// cancellation of the additive 1.
Complex hauptmodul_equianharmonic_offset(TauPoint tau, const TruncationPolicy& policy = {});

/// 9 eta(9 tau)^3 / eta(tau)^3 + 1.
Complex hauptmodul_equianharmonic(TauPoint tau, const TruncationPolicy& policy = {});

/// theta2 / theta3.
Complex hauptmodul_hyperelliptic(TauPoint tau, const TruncationPolicy& policy = {});

/// sqrt(2) theta2(tau) / theta2(tau / 2): the single-valued square root of
/// theta2 / theta3. Requires Im(tau) / 2 >= kMinImTau.
Complex sqrt_theta_ratio(TauPoint tau, const TruncationPolicy& policy = {});

}  // namespace abelian
