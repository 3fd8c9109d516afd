#include <algorithm>
#include <cmath>

#include "abelian/hypergeometric.hpp"

namespace abelian {

void IncompleteIntegralSpec::validate() const {
  if (n < 1) throw DomainError("incomplete integral: n must be a positive integer");
  if (!is_finite(alpha) || !is_finite(beta) || !is_finite(z)) {
    throw DomainError("incomplete integral: non-finite parameter");
  }
  if (base == IntegralBase::from_zero) {
    if (!(alpha.real() > 0.0)) throw DomainError("from_zero requires Re(alpha) > 0");
  } else {
    if (!((double(n) * beta - alpha).real() > 0.0)) {
      throw DomainError("from_infinity requires Re(n beta - alpha) > 0");
    }
    if (z == Complex{}) throw DomainError("from_infinity: z must be nonzero");
  }
}

Complex incomplete_integral_2f1(const IncompleteIntegralSpec& spec, const TruncationPolicy& policy) {
  spec.validate();
  const double n = spec.n;
  if (spec.base == IntegralBase::from_zero) {
    const Complex s = spec.alpha / n;
    const Complex f = gauss_2f1(HypergeometricParams(spec.beta, s, s + 1.0), std::pow(spec.z, spec.n),
                                policy);
    return std::exp(kI * kPi * spec.beta) / spec.alpha * principal_power(spec.z, spec.alpha) * f;
  }
  const Complex e = spec.alpha - n * spec.beta;
  const Complex s = spec.beta - spec.alpha / n;
  const Complex f = gauss_2f1(HypergeometricParams(spec.beta, s, s + 1.0),
                              1.0 / std::pow(spec.z, spec.n), policy);
  return principal_power(spec.z, e) / e * f;
}

Polyline default_oracle_path(const IncompleteIntegralSpec& spec) {
  spec.validate();
  if (spec.base == IntegralBase::from_zero) {
    if (spec.z == Complex{}) throw DomainError("oracle path: z = 0 gives an empty path");
    return Polyline::segment(0.0, spec.z);
  }
  return Polyline::segment(0.0, 1.0 / spec.z);
}

namespace {

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  double t = std::real((p - a) * std::conj(d)) / std::norm(d);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

void check_path(const IncompleteIntegralSpec& spec, const Polyline& path) {
  const Complex start = 0.0;
  const Complex end = spec.base == IntegralBase::from_zero ? spec.z : 1.0 / spec.z;
  if (path.front() != start) throw DomainError("oracle path must start at 0");
  if (std::abs(path.back() - end) > 1e-14 * (1.0 + std::abs(end))) {
    throw DomainError("oracle path must end at the integration endpoint");
  }
  const auto& v = path.vertices();
  for (int j = 0; j < spec.n; ++j) {
    const double angle = 2.0 * kPi * j / spec.n;
    const Complex root{std::cos(angle), std::sin(angle)};
    if (std::abs(root - end) < 1e-12) continue;
    for (std::size_t s = 0; s + 1 < v.size(); ++s) {
      if (distance_to_segment(root, v[s], v[s + 1]) < 1e-12) {
        throw DomainError("oracle path passes through a branch point");
      }
    }
  }
}

}  // namespace

Complex oracle_incomplete_integral(const IncompleteIntegralSpec& spec, const Polyline& path,
                                   double tol) {
  spec.validate();
  check_path(spec, path);
  const int n = spec.n;
  const Complex alpha = spec.alpha;
  const Complex beta = spec.beta;
  if (spec.base == IntegralBase::from_zero) {
    const Complex phase = std::exp(kI * kPi * beta);
    const ComplexFunction integrand = [=](Complex u) {
      return phase * principal_power(u, alpha - 1.0) * principal_power(1.0 - std::pow(u, n), -beta);
    };
    return integrate(integrand, path, tol).value;
  }
  const Complex exponent = double(n) * beta - alpha - 1.0;
  const ComplexFunction integrand = [=](Complex v) {
    return -principal_power(v, exponent) * principal_power(1.0 - std::pow(v, n), -beta);
  };
  return integrate(integrand, path, tol).value;
}

}  // namespace abelian
