#include <array>
#include <cmath>

#include "abelian/hypergeometric.hpp"

namespace abelian {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex lanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + double(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

Complex gamma_fn(Complex z) {
  if (!is_finite(z)) throw DomainError("gamma_fn: non-finite argument");
  if (is_pole(z)) throw DomainError("gamma_fn: pole at a non-positive integer");
  if (z.real() < 0.5) {
    return require_finite(kPi / (std::sin(kPi * z) * lanczos(1.0 - z)), "gamma_fn");
  }
  return require_finite(lanczos(z), "gamma_fn");
}

Complex euler_beta(Complex a, Complex b) {
  if (is_pole(a) || is_pole(b) || is_pole(a + b)) {
    throw DomainError("euler_beta: a, b and a+b must avoid the poles of Gamma");
  }
  return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

}  // namespace abelian
