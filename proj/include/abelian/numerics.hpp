#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "abelian/complex.hpp"

namespace abelian {

using ComplexFunction = std::function<Complex(Complex)>;

/// Stop rule shared by every q-series and hypergeometric series: summation
/// ends after two consecutive terms with |term| < rel_tol * |partial sum|.
struct TruncationPolicy {
  double rel_tol = 1e-16;
  int max_terms = 10000;
};

/// Integration path: straight segments between consecutive vertices.
class Polyline {
 public:
  explicit Polyline(std::vector<Complex> vertices);
  Polyline(std::initializer_list<Complex> vertices) : Polyline(std::vector<Complex>(vertices)) {}

  static Polyline segment(Complex from, Complex to) { return Polyline({from, to}); }

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }
  Complex front() const noexcept { return vertices_.front(); }
  Complex back() const noexcept { return vertices_.back(); }
  std::size_t segments() const noexcept { return vertices_.size() - 1; }

  /// This path followed by `next`; next.front() must equal back().
  Polyline then(const Polyline& next) const;

 private:
  std::vector<Complex> vertices_;
};

/// Sampling circle for Cauchy-integral differentiation.
class DerivativeStencil {
 public:
  static constexpr double kDefaultRadius = 1e-2;
  static constexpr int kDefaultNodes = 64;

  explicit DerivativeStencil(double radius = kDefaultRadius, int nodes = kDefaultNodes);

  double radius() const noexcept { return radius_; }
  int nodes() const noexcept { return nodes_; }

 private:
  double radius_;
  int nodes_;
};

/// f'(z0), ..., f^(order)(z0) from the trapezoidal rule applied to the Cauchy
/// integral on |z - z0| = stencil.radius(). `order` is 1..4. The caller
/// guarantees f is holomorphic on the closed disk.
std::vector<Complex> holomorphic_derivatives(const ComplexFunction& f, Complex z0, int order,
                                             const DerivativeStencil& stencil = DerivativeStencil{});

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Path integral of f along `path` with absolute error target `tol`.
///
/// Interior segments use adaptive bisection of a 16-point Gauss-Legendre
/// rule. The two path endpoints are approached by geometric grading (ratio
/// 1/2, at most 60 levels) and the remaining sliver is closed by geometric
/// extrapolation of the last level contributions, which is exact to leading
/// order for integrable power singularities t^p, p > -1. f is never sampled
/// at a path endpoint.
///
/// Throws AccuracyError (carrying the best estimate and bound) when the node
/// budget is exhausted before `tol` is met.
QuadratureResult integrate(const ComplexFunction& f, const Polyline& path, double tol);

inline Complex contour_quadrature(const ComplexFunction& f, const Polyline& path, double tol) {
  return integrate(f, path, tol).value;
}

}  // namespace abelian
