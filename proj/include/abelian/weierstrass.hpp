#pragma once

#include <vector>

#include "abelian/complex.hpp"
#include "abelian/numerics.hpp"

namespace abelian {

/// Invariants (g2, g3) of the cubic w^2 = 4z^3 - g2 z - g3.
class EllipticInvariants {
 public:
  /// Throws DomainError when g2^3 - 27 g3^2 vanishes.
  EllipticInvariants(Complex g2, Complex g3);

  static EllipticInvariants lemniscatic() { return {4.0, 0.0}; }
  static EllipticInvariants equianharmonic() { return {0.0, 4.0}; }

  Complex g2() const noexcept { return g2_; }
  Complex g3() const noexcept { return g3_; }
  Complex discriminant() const noexcept { return g2_ * g2_ * g2_ - 27.0 * g3_ * g3_; }

  bool operator==(const EllipticInvariants&) const = default;

 private:
  Complex g2_;
  Complex g3_;
};

struct WeierstrassValues {
  Complex p;        ///< wp(u)
  Complex p_prime;  ///< wp'(u)
};

/// Weierstrass functions of one lattice, described only by its invariants.
///
/// wp is the Laurent series 1/u^2 + sum c_k u^(2k-2), summed for
/// |u| <= series_radius() and otherwise reached by halving u and applying the
/// duplication formula on the way back. The radius of convergence (distance
/// from 0 to the nearest nonzero lattice point) is estimated once at
/// construction from the growth of the c_k; it is also the validated radius of
/// sigma and zeta, which are not extended by quasi-periodicity.
class WeierstrassLattice {
 public:
  /// |wp| above this is reported as a pole.
  static constexpr double kPoleThreshold = 1e12;

  explicit WeierstrassLattice(EllipticInvariants invariants);

  const EllipticInvariants& invariants() const noexcept { return invariants_; }
  double lattice_radius() const noexcept { return lattice_radius_; }
  double series_radius() const noexcept { return 0.4 * lattice_radius_; }
  double validated_radius() const noexcept { return lattice_radius_; }

  WeierstrassValues values(Complex u) const;
  Complex wp(Complex u) const { return values(u).p; }
  Complex wp_prime(Complex u) const { return values(u).p_prime; }

  /// Laurent coefficients c_k, k = 2..; element i is c_(i+2).
  const std::vector<Complex>& laurent_coefficients() const noexcept { return laurent_; }

  /// Double series of sigma in g2, g3. DomainNotSupported for
  /// |u| >= validated_radius().
  Complex sigma(Complex u) const;
  /// sigma'/sigma with sigma' from a Cauchy ring. Same domain as sigma;
  /// PoleError at u = 0.
  Complex zeta(Complex u) const;

 private:
  WeierstrassValues series_values(Complex v) const;
  Complex sigma_series(Complex u) const;

  EllipticInvariants invariants_;
  std::vector<Complex> laurent_;
  std::vector<Complex> laurent_derivative_;
  std::vector<Complex> sigma_;  // coefficient of u^(2j+1) at index j
  double lattice_radius_ = 0.0;
};

/// Shared instances for (4, 0) and (0, 4), built on first use.
const WeierstrassLattice& lemniscatic_lattice();
const WeierstrassLattice& equianharmonic_lattice();

Complex wp(Complex u, const EllipticInvariants& inv);
Complex wp_prime(Complex u, const EllipticInvariants& inv);
Complex weier_zeta(Complex u, const EllipticInvariants& inv);
Complex weier_sigma(Complex u, const EllipticInvariants& inv);

/// Which of the two values +-u a formula written "+-u" returns.
enum class Branch { plus, minus };

inline double branch_sign(Branch b) noexcept { return b == Branch::plus ? 1.0 : -1.0; }

/// u with wp(u; 4, 0) = x: x^(-1/2) 2F1(1/2, 1/4; 5/4 | x^-2), principal root.
/// DomainNotSupported unless |x^-2| <= 0.95.
Complex wp_inverse_lemniscatic(Complex x, const TruncationPolicy& policy = {});

/// u with wp(u; 0, 4) = z: z^(-1/2) 2F1(1/2, 1/6; 7/6 | z^-3), principal root.
/// DomainNotSupported unless |z^-3| <= 0.95.
Complex wp_inverse_equianharmonic(Complex z, const TruncationPolicy& policy = {});

/// The zero i B(1/6, 1/3) / 6 of wp(u; 0, 4). The real part is exactly 0.
Complex u0_constant();

/// Parameter of the third-kind integral.
struct ThirdKindParam {
  Complex alpha_point;
};

/// -zeta(u) with u = +-wp_inverse(z); only the (4, 0) and (0, 4) lattices.
Complex integral_second_kind(Complex z, const EllipticInvariants& inv, Branch branch = Branch::plus,
                             const TruncationPolicy& policy = {});

/// log(sigma(u - alpha) / sigma(u)) + zeta(alpha) u, principal logarithm,
/// u = +-wp_inverse(z). DomainError at the logarithmic pole z = wp(alpha)
/// on this sheet.
Complex integral_third_kind(Complex z, ThirdKindParam p, const EllipticInvariants& inv,
                            Branch branch = Branch::plus, const TruncationPolicy& policy = {});

}  // namespace abelian
