#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "abelian/uniformization.hpp"

namespace abelian {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

Complex horner(const std::vector<Complex>& c, Complex x) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double magnitude_sum(const std::vector<Complex>& c, double r) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

}  // namespace

Complex bracket_schwarzian(const ComplexFunction& f, Complex tau0,
                           const DerivativeStencil& stencil) {
  const auto d = holomorphic_derivatives(f, tau0, 3, stencil);
  const Complex d1 = d[0];
  if (std::abs(d1) < kCriticalDerivative) {
    throw CriticalPointError("bracket_schwarzian: |f'(tau0)| below 1e-10");
  }
  const Complex d1sq = d1 * d1;
  return d[2] / (d1sq * d1) - 1.5 * d[1] * d[1] / (d1sq * d1sq);
}

DerivativeStencil default_schwarz_stencil(TauPoint tau) {
  return DerivativeStencil(std::min(DerivativeStencil::kDefaultRadius, tau.im() / 10.0),
                           DerivativeStencil::kDefaultNodes);
}

RationalFunction::RationalFunction(std::vector<Complex> numerator, std::vector<Complex> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.empty()) throw DomainError("rational function with empty denominator");
}

Complex RationalFunction::operator()(Complex x) const {
  const Complex den = horner(denominator_, x);
  const double scale = magnitude_sum(denominator_, std::abs(x));
  if (std::abs(den) <= 1e-14 * scale) throw PoleError("Q evaluated at a singular point", x);
  return horner(numerator_, x) / den;
}

Complex SchwarzEquation::q(Complex x) const {
  if (torus) return -2.0 * wp(2.0 * x, *torus);
  return (*rational)(x);
}

SchwarzEquation SchwarzEquation::lemniscatic() {
  // -(1/2)(x^4 + 2x^2 + 1) / (x^6 - 2x^4 + x^2)
  return {"lemniscatic",
          RationalFunction({-0.5, 0.0, -1.0, 0.0, -0.5}, {0.0, 0.0, 1.0, 0.0, -2.0, 0.0, 1.0}),
          std::nullopt,
          {0.0, 1.0, -1.0},
          [](TauPoint tau) { return tau.im() >= kMinImTau; }};
}

SchwarzEquation SchwarzEquation::equianharmonic() {
  // -(1/2)(z^4 + 8z) / (z^6 - 2z^3 + 1)
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  return {"equianharmonic",
          RationalFunction({0.0, -4.0, 0.0, 0.0, -0.5}, {1.0, 0.0, 0.0, -2.0, 0.0, 0.0, 1.0}),
          std::nullopt,
          {1.0, w, std::conj(w)},
          [](TauPoint tau) { return tau.im() >= kMinImTau; }};
}

SchwarzEquation SchwarzEquation::torus_form(std::string id, EllipticInvariants inv,
                                            TauPredicate predicate) {
  return {std::move(id), std::nullopt, inv, {}, std::move(predicate)};
}

SchwarzEquation SchwarzEquation::trivial() {
  return {"trivial", RationalFunction({0.0}, {1.0}), std::nullopt, {}, [](TauPoint) { return true; }};
}

VerificationReport schwarz_residual(const SchwarzEquation& eq, const ComplexFunction& candidate,
                                    TauPoint tau, const DerivativeStencil& stencil,
                                    double tolerance) {
  if (eq.convergence_predicate && !eq.convergence_predicate(tau)) {
    throw DomainError("schwarz_residual: tau outside the convergence predicate of " + eq.id);
  }
  const Complex lhs = bracket_schwarzian(candidate, tau.value(), stencil);
  const Complex x = candidate(tau.value());
  const Complex rhs = eq.q(x);
  VerificationReport r;
  r.identity_id = eq.id;
  r.point = tau.value();
  r.metadata["equation"] = eq.id;
  r.metadata["bracket"] = format_complex(lhs);
  r.metadata["Q"] = format_complex(rhs);
  r.metadata["stencil.radius"] = format_double(stencil.radius());
  r.metadata["stencil.nodes"] = std::to_string(stencil.nodes());
  r.metadata["residual.form"] = "|bracket - Q| / (1 + |Q|)";
  r.settle(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), tolerance);
  return r;
}

}  // namespace abelian
