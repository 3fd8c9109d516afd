#include <cmath>

#include "abelian/uniformization.hpp"

namespace abelian {

CurvePoint::CurvePoint(Complex x, Complex y, Branch sign) : x_(x), y_(y), sign_(sign) {
  if (!is_finite(x) || !is_finite(y)) throw DomainError("CurvePoint: non-finite coordinates");
  const Complex x5 = x * x * x * x * x;
  if (std::abs(y * y - (x5 - x)) > 1e-10 * (1.0 + std::abs(x5))) {
    throw DomainError("CurvePoint: (x, y) is not on w^2 = z^5 - z");
  }
}

CurvePoint CurvePoint::at(Complex x, Branch sign) {
  const Complex x5 = x * x * x * x * x;
  return {x, principal_sqrt(x5 - x), sign};
}

std::pair<Complex, Complex> k_pm(Complex A, Complex B) {
  if (A == Complex{1.0, 0.0} || B == Complex{1.0, 0.0}) throw DomainError("k_pm: A and B must differ from 1");
  const Complex sa = principal_sqrt(A);
  const Complex sb = principal_sqrt(B);
  const Complex den = (1.0 - A) * (1.0 - B);
  return {-(sa + sb) * (sa + sb) / den, -(sa - sb) * (sa - sb) / den};
}

CoverConstants CoverConstants::from(Complex A, Complex B) {
  const auto [kp, km] = k_pm(A, B);
  return {A, B, principal_sqrt(A), principal_sqrt(B), principal_sqrt((1.0 - A) * (1.0 - B)), kp, km};
}

CoverConstants CoverConstants::quintic() { return from(-1.0, kI); }

std::array<Complex, 3> CoverConstants::e_roots(Branch sign) const {
  const Complex kk = k(sign);
  return {-(kk + 1.0) / 3.0, (2.0 * kk - 1.0) / 3.0, (2.0 - kk) / 3.0};
}

EllipticInvariants cover_invariants(const CoverConstants& c, Branch sign) {
  const auto e = c.e_roots(sign);
  return {-4.0 * (e[0] * e[1] + e[0] * e[2] + e[1] * e[2]), 4.0 * e[0] * e[1] * e[2]};
}

CoverImage covering_map(const CurvePoint& p, const CoverConstants& c) {
  const Complex x = p.x();
  const Complex xa = x - c.A;
  const Complex xb = x - c.B;
  if (std::abs(xa) < 1e-300 || std::abs(xb) < 1e-300) {
    throw PoleError("covering_map: x at a pole A or B", x);
  }
  const double s = branch_sign(p.sign());
  const Complex root_sum = c.sqrt_A + s * c.sqrt_B;
  const Complex r2 = root_sum * root_sum;
  const Complex pv = -r2 / (xa * xb) * x - (c.k(p.sign()) + 1.0) / 3.0;
  const Complex pp =
      2.0 * r2 / c.sqrt_one_minus * (x + s * c.sqrt_A * c.sqrt_B) * p.y() / (xa * xa * xb * xb);
  return {require_finite(pv, "covering_map"), require_finite(pp, "covering_map")};
}

Complex reduce_differential(const CurvePoint& p, const CoverConstants& c) {
  if (p.y() == Complex{}) throw PoleError("reduce_differential: branch point y = 0", p.x());
  const double s = branch_sign(p.sign());
  return 0.5 * c.sqrt_one_minus * (p.x() - s * c.sqrt_A * c.sqrt_B) / p.y();
}

}  // namespace abelian
