#include <cmath>
#include <string>

#include "abelian/kernels/reduce.hpp"
#include "abelian/numerics.hpp"

namespace abelian {

DerivativeStencil::DerivativeStencil(double radius, int nodes) : radius_(radius), nodes_(nodes) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("stencil radius must be positive and finite");
  }
  if (nodes < 16 || (nodes & (nodes - 1)) != 0) {
    throw DomainError("stencil node count must be a power of two >= 16");
  }
}

std::vector<Complex> holomorphic_derivatives(const ComplexFunction& f, Complex z0, int order,
                                             const DerivativeStencil& stencil) {
  if (order < 1 || order > 4) throw DomainError("derivative order must be in 1..4");
  const int n = stencil.nodes();
  const double r = stencil.radius();

  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * kPi * j / n;
    roots[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
  }

  std::vector<Complex> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Complex value = f(z0 + r * roots[static_cast<std::size_t>(j)]);
    if (!is_finite(value)) {
      throw EvaluationError("non-finite sample at node " + std::to_string(j) +
                            " of the differentiation circle");
    }
    samples[static_cast<std::size_t>(j)] = value;
  }

  std::vector<Complex> twiddle(static_cast<std::size_t>(n));
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(order));
  double factorial = 1.0;
  double r_pow = 1.0;
  for (int k = 1; k <= order; ++k) {
    factorial *= k;
    r_pow *= r;
    for (int j = 0; j < n; ++j) {
      twiddle[static_cast<std::size_t>(j)] = std::conj(roots[static_cast<std::size_t>((j * k) % n)]);
    }
    const Complex coefficient = kernels::dot(samples, twiddle) / static_cast<double>(n);
    out.push_back(coefficient * (factorial / r_pow));
  }
  return out;
}

}  // namespace abelian
