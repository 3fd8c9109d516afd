#include <cmath>

#include "abelian/hypergeometric.hpp"

namespace abelian {

namespace {

bool on_open_segment(Complex p, Complex end) {
  // p = t * end with t in (0, 1)?
  if (end == Complex{}) return false;
  const Complex t = p / end;
  return std::abs(t.imag()) < 1e-14 && t.real() > 1e-14 && t.real() < 1.0 - 1e-14;
}

}  // namespace

Complex elliptic_K(Complex k) {
  const Complex k2 = k * k;
  if (std::abs(k2.imag()) == 0.0 && k2.real() >= 1.0) {
    throw DomainError("elliptic_K: k^2 on the cut [1, inf)");
  }
  Complex a{1.0, 0.0};
  Complex b = principal_sqrt(1.0 - k2);
  for (int iter = 0; iter < 64; ++iter) {
    const Complex next_a = 0.5 * (a + b);
    Complex next_b = principal_sqrt(a * b);
    if (std::abs(next_a - next_b) > std::abs(next_a + next_b)) next_b = -next_b;
    a = next_a;
    b = next_b;
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
  }
  return kPi / (2.0 * a);
}

Complex elliptic_F(Complex x, Complex k) {
  if (!is_finite(x) || !is_finite(k)) throw DomainError("elliptic_F: non-finite argument");
  if (x == Complex{}) return {};
  if (x == Complex{1.0, 0.0}) return elliptic_K(k);
  if (x == Complex{-1.0, 0.0}) return -elliptic_K(k);
  if (on_open_segment(1.0, x) || on_open_segment(-1.0, x)) {
    throw DomainError("elliptic_F: path [0, x] crosses the branch point t = +-1");
  }
  if (k != Complex{}) {
    const Complex inv = 1.0 / k;
    if (on_open_segment(inv, x) || on_open_segment(-inv, x)) {
      throw DomainError("elliptic_F: path [0, x] crosses the branch point t = +-1/k");
    }
  }
  const Complex k2 = k * k;
  const ComplexFunction integrand = [=](Complex t) {
    return 1.0 / (principal_sqrt(1.0 - t * t) * principal_sqrt(1.0 - k2 * t * t));
  };
  return integrate(integrand, Polyline::segment(0.0, x), 1e-14).value;
}

}  // namespace abelian
