#include <cmath>

#include "abelian/hypergeometric.hpp"
#include "abelian/weierstrass.hpp"

namespace abelian {

Complex wp_inverse_lemniscatic(Complex x, const TruncationPolicy& policy) {
  if (x == Complex{} || !is_finite(x)) throw DomainNotSupported("wp_inverse_lemniscatic: x = 0");
  const Complex arg = 1.0 / (x * x);
  if (std::abs(arg) > kHypergeometricRadius) {
    throw DomainNotSupported("wp_inverse_lemniscatic: |x^-2| > 0.95");
  }
  return principal_power(x, -0.5) *
         gauss_2f1(HypergeometricParams(0.5, 0.25, 1.25), arg, policy, HypergeometricMethod::series);
}

Complex wp_inverse_equianharmonic(Complex z, const TruncationPolicy& policy) {
  if (z == Complex{} || !is_finite(z)) throw DomainNotSupported("wp_inverse_equianharmonic: z = 0");
  const Complex arg = 1.0 / (z * z * z);
  if (std::abs(arg) > kHypergeometricRadius) {
    throw DomainNotSupported("wp_inverse_equianharmonic: |z^-3| > 0.95");
  }
  return principal_power(z, -0.5) * gauss_2f1(HypergeometricParams(0.5, 1.0 / 6.0, 7.0 / 6.0), arg,
                                              policy, HypergeometricMethod::series);
}

Complex u0_constant() { return {0.0, euler_beta(1.0 / 6.0, 1.0 / 3.0).real() / 6.0}; }

}  // namespace abelian
