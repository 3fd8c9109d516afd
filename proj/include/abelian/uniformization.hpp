#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian/modular.hpp"
#include "abelian/numerics.hpp"
#include "abelian/report.hpp"
#include "abelian/weierstrass.hpp"

namespace abelian {

/// Below this |f'(tau0)| the bracket Schwarzian raises CriticalPointError.
inline constexpr double kCriticalDerivative = 1e-10;

/// [f, tau] = f'''/f'^3 - (3/2) f''^2/f'^4, i.e. {f, tau} / f'^2.
Complex bracket_schwarzian(const ComplexFunction& f, Complex tau0,
                           const DerivativeStencil& stencil = DerivativeStencil{});

/// Radius min(1e-2, Im(tau)/10), 64 nodes.
DerivativeStencil default_schwarz_stencil(TauPoint tau);

// tau-representations of wp^-1 composed with a Hauptmodul. Each raises
// DomainNotSupported outside its convergence predicate.

/// |theta3/theta2|^4 <= 0.95, the disk of the 2F1 series.
bool u_lemniscatic_predicate(TauPoint tau, const TruncationPolicy& policy = {});
/// (theta3/theta2) 2F1(1/2, 1/4; 5/4 | theta3^4/theta2^4).
Complex u_lemniscatic(TauPoint tau, const TruncationPolicy& policy = {});

/// |z(tau)^-3| <= 0.95.
bool u_equianharmonic_root_predicate(TauPoint tau, const TruncationPolicy& policy = {});
/// z^(-1/2) 2F1(1/2, 1/6; 7/6 | z^-3), principal root.
Complex u_equianharmonic_root(TauPoint tau, const TruncationPolicy& policy = {});

/// |z(tau)|^3 <= 0.95.
bool u_equianharmonic_rootfree_predicate(TauPoint tau, const TruncationPolicy& policy = {});
/// u0 + (i/2) z 2F1(1/2, 1/3; 4/3 | z^3).
Complex u_equianharmonic_rootfree(TauPoint tau, const TruncationPolicy& policy = {});

/// |theta2/theta3|^4 <= 0.95 and Im(tau)/2 >= kMinImTau.
bool u_hyperelliptic_predicate(TauPoint tau, const TruncationPolicy& policy = {});
/// (2 sqrt2 i/(2m+1)) theta2^(m+1)/(theta3^m theta2(tau/2))
///   * 2F1(1/2, m/4 + 1/8; m/4 + 9/8 | theta2^4/theta3^4),  m = 0..3.
/// This is the integral of z^m dz / sqrt(z^5 - z) from 0 to z = theta2/theta3
/// with 1/sqrt(z^5 - z) = i / (sqrt_theta_ratio * sqrt(1 - z^4)).
Complex u_hyperelliptic(int m, TauPoint tau, const TruncationPolicy& policy = {});

/// Ratio of polynomials, coefficients in ascending powers.
class RationalFunction {
 public:
  RationalFunction(std::vector<Complex> numerator, std::vector<Complex> denominator);

  /// PoleError when the denominator vanishes to working precision.
  Complex operator()(Complex x) const;

 private:
  std::vector<Complex> numerator_;
  std::vector<Complex> denominator_;
};

using TauPredicate = std::function<bool(TauPoint)>;

/// Right-hand side Q of [x, tau] = Q(x). When `torus` is set the equation is
/// the torus form [u, tau] = -2 wp(2u; g2, g3) and `rational` is unused.
struct SchwarzEquation {
  std::string id;
  std::optional<RationalFunction> rational;
  std::optional<EllipticInvariants> torus;
  std::vector<Complex> singular_set;
  TauPredicate convergence_predicate;

  Complex q(Complex x) const;

  /// Q(x) = -(1/2)(x^2 + 1)^2 / (x^3 - x)^2.
  static SchwarzEquation lemniscatic();
  /// Q(z) = -(1/2) z (z^3 + 8) / (z^3 - 1)^2.
  static SchwarzEquation equianharmonic();
  /// Q(u) = -2 wp(2u; inv), gated by `predicate`.
  static SchwarzEquation torus_form(std::string id, EllipticInvariants inv, TauPredicate predicate);
  /// Q = 0, the equation solved by every Mobius map.
  static SchwarzEquation trivial();
};

/// |[candidate, tau] - Q(candidate(tau))| / (1 + |Q|). DomainError when tau
/// fails the predicate.
VerificationReport schwarz_residual(const SchwarzEquation& eq, const ComplexFunction& candidate,
                                    TauPoint tau, const DerivativeStencil& stencil,
                                    double tolerance = 1e-7);

/// A point of w^2 = z^5 - z with the sign branch of the cover.
class CurvePoint {
 public:
  /// DomainError unless |y^2 - (x^5 - x)| <= 1e-10 (1 + |x|^5).
  CurvePoint(Complex x, Complex y, Branch sign);
  /// y = principal sqrt(x^5 - x).
  static CurvePoint at(Complex x, Branch sign);

  Complex x() const noexcept { return x_; }
  Complex y() const noexcept { return y_; }
  Branch sign() const noexcept { return sign_; }

 private:
  Complex x_;
  Complex y_;
  Branch sign_;
};

/// k+- = -(sqrt A +- sqrt B)^2 / ((1 - A)(1 - B)), principal roots.
std::pair<Complex, Complex> k_pm(Complex A, Complex B);

/// Constants of the degree-two cover of y^2 = x(x-1)(x-A)(x-B)(x-AB) onto
/// two tori. The root written sqrt(AB) is taken as sqrt(A) sqrt(B).
struct CoverConstants {
  Complex A;
  Complex B;
  Complex sqrt_A;
  Complex sqrt_B;
  Complex sqrt_one_minus;  ///< sqrt((1 - A)(1 - B))
  Complex k_plus;
  Complex k_minus;

  static CoverConstants from(Complex A, Complex B);
  /// A = -1, B = i, which turns the sextic model into w^2 = z^5 - z.
  static CoverConstants quintic();

  Complex k(Branch sign) const noexcept { return sign == Branch::plus ? k_plus : k_minus; }
  /// {-(k+1)/3, (2k-1)/3, (2-k)/3}: images of x = 0, x = 1 and the third
  /// half-period. The first is the image of the branch point x = 0.
  std::array<Complex, 3> e_roots(Branch sign) const;
};

/// g2 = -4 (e1 e2 + e1 e3 + e2 e3), g3 = 4 e1 e2 e3 from the e-roots.
EllipticInvariants cover_invariants(const CoverConstants& c, Branch sign);

struct CoverImage {
  Complex p;        ///< wp(u)
  Complex p_prime;  ///< wp'(u)
};

/// wp(u)  = -(sqrt A +- sqrt B)^2 x / ((x - A)(x - B)) - (k+- + 1)/3,
/// wp'(u) = 2 (sqrt A +- sqrt B)^2 (x +- sqrt A sqrt B) y
///          / (sqrt((1-A)(1-B)) (x - A)^2 (x - B)^2).
/// PoleError at x = A or x = B.
CoverImage covering_map(const CurvePoint& p, const CoverConstants& c);

/// du/dx = (1/2) sqrt((1-A)(1-B)) (x -+ sqrt A sqrt B) / y. PoleError at y = 0.
Complex reduce_differential(const CurvePoint& p, const CoverConstants& c);

}  // namespace abelian
