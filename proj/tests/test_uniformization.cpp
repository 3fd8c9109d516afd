#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "abelian/hypergeometric.hpp"
#include "abelian/modular.hpp"
#include "abelian/uniformization.hpp"
#include "support.hpp"

using namespace abelian;
using testing::abs_err;
using testing::rel_err;

TEST_CASE("bracket Schwarzian examples") {
  const DerivativeStencil st(0.05, 64);
  const auto mobius = [](Complex t) { return (2.0 * t + 1.0) / (t + 3.0); };
  CHECK(std::abs(bracket_schwarzian(mobius, Complex{0.2, 0.5}, st)) < 1e-10);
  CHECK(abs_err(bracket_schwarzian([](Complex t) { return std::exp(t); }, 0.0, st), -0.5) < 1e-10);
  const Complex t0{0.3, 1.1};
  CHECK(abs_err(bracket_schwarzian([](Complex t) { return std::exp(t); }, t0, st), -0.5 * std::exp(-2.0 * t0)) <
        1e-10);
  CHECK(abs_err(bracket_schwarzian([](Complex t) { return t * t; }, 1.0, st), -0.375) < 1e-12);
  CHECK_THROWS_AS(bracket_schwarzian([](Complex t) { return t * t; }, 0.0, st), CriticalPointError);
  CHECK_THROWS_AS(bracket_schwarzian([](Complex) { return Complex{2.0, 0.0}; }, 0.0, st), CriticalPointError);
}

TEST_CASE("default stencil") {
  CHECK(default_schwarz_stencil(TauPoint({0.0, 1.0})).radius() == doctest::Approx(1e-2));
  CHECK(default_schwarz_stencil(TauPoint({0.0, 0.05})).radius() == doctest::Approx(5e-3));
  CHECK(default_schwarz_stencil(TauPoint({0.0, 1.0})).nodes() == 64);
}

TEST_CASE("rational right-hand sides") {
  const auto lemn = SchwarzEquation::lemniscatic();
  const Complex x{0.3, 0.7};
  const Complex x3x = x * x * x - x;
  CHECK(rel_err(lemn.q(x), -0.5 * (x * x + 1.0) * (x * x + 1.0) / (x3x * x3x)) < 1e-14);
  for (const Complex s : lemn.singular_set) CHECK_THROWS_AS(lemn.q(s), PoleError);
  const auto equi = SchwarzEquation::equianharmonic();
  const Complex z3 = x * x * x;
  CHECK(rel_err(equi.q(x), -0.5 * x * (z3 + 8.0) / ((z3 - 1.0) * (z3 - 1.0))) < 1e-14);
  for (const Complex s : equi.singular_set) CHECK_THROWS_AS(equi.q(s), PoleError);
  CHECK(SchwarzEquation::trivial().q(x) == Complex{});
  CHECK_THROWS_AS(RationalFunction({1.0}, {}), DomainError);
}

TEST_CASE("Schwarz residuals of the Hauptmoduln") {
  const TauPoint tau({0.0, 1.2});
  const auto st = default_schwarz_stencil(tau);
  const auto chi = schwarz_residual(SchwarzEquation::lemniscatic(),
                                    [](Complex t) { return hauptmodul_lemniscatic(TauPoint(t)); }, tau, st, 1e-8);
  CHECK(chi.passed);
  CHECK(chi.residual < 1e-8);
  CHECK(chi.metadata.count("bracket") == 1);
  CHECK(chi.metadata.count("Q") == 1);
  const TauPoint tz({0.05, 1.1});
  const auto z = schwarz_residual(SchwarzEquation::equianharmonic(),
                                  [](Complex t) { return hauptmodul_equianharmonic(TauPoint(t)); }, tz,
                                  default_schwarz_stencil(tz), 1e-8);
  CHECK(z.passed);
  // a non-solution fails
  const auto wrong = schwarz_residual(SchwarzEquation::lemniscatic(),
                                      [](Complex t) { return hauptmodul_hyperelliptic(TauPoint(t)); }, tau, st, 1e-8);
  CHECK_FALSE(wrong.passed);
  const auto mob = schwarz_residual(SchwarzEquation::trivial(), [](Complex t) { return (t - 1.0) / (t + 2.0); },
                                    tau, st, 1e-8);
  CHECK(mob.residual < 1e-8);
}

TEST_CASE("lemniscatic tau-representation") {
  const TauPoint in({1.0, 0.8});
  REQUIRE(u_lemniscatic_predicate(in));
  const Complex t3 = theta3(in);
  const Complex t2 = theta2(in);
  const Complex r = t3 / t2;
  CHECK(rel_err(u_lemniscatic(in), r * gauss_2f1({0.5, 0.25, 1.25}, std::pow(r, 4))) < 1e-14);
  CHECK(rel_err(wp(u_lemniscatic(in), EllipticInvariants::lemniscatic()), hauptmodul_lemniscatic(in)) < 1e-10);
  const TauPoint out({0.0, 1.0});
  CHECK_FALSE(u_lemniscatic_predicate(out));
  CHECK_THROWS_AS(u_lemniscatic(out), DomainNotSupported);
  const auto res = schwarz_residual(
      SchwarzEquation::torus_form("torus(4,0)", EllipticInvariants::lemniscatic(),
                                  [](TauPoint t) { return u_lemniscatic_predicate(t); }),
      [](Complex t) { return u_lemniscatic(TauPoint(t)); }, in, default_schwarz_stencil(in), 1e-7);
  CHECK(res.passed);
  CHECK_THROWS_AS(schwarz_residual(SchwarzEquation::torus_form(
                                       "torus(4,0)", EllipticInvariants::lemniscatic(),
                                       [](TauPoint t) { return u_lemniscatic_predicate(t); }),
                                   [](Complex t) { return Complex{t}; }, out, default_schwarz_stencil(out)),
                  DomainError);
}

TEST_CASE("equianharmonic tau-representations") {
  const EllipticInvariants inv = EllipticInvariants::equianharmonic();
  const TauPoint root({0.0, 0.7});
  REQUIRE(u_equianharmonic_root_predicate(root));
  CHECK(rel_err(wp(u_equianharmonic_root(root), inv), hauptmodul_equianharmonic(root)) < 1e-10);
  CHECK_THROWS_AS(u_equianharmonic_root(TauPoint({0.0, 1.2})), DomainNotSupported);

  const TauPoint free({0.5, 0.8});
  REQUIRE(u_equianharmonic_rootfree_predicate(free));
  CHECK(rel_err(wp(u_equianharmonic_rootfree(free), inv), hauptmodul_equianharmonic(free)) < 1e-10);
  CHECK_THROWS_AS(u_equianharmonic_rootfree(TauPoint({0.5, 1.0})), DomainNotSupported);
  const Complex z = hauptmodul_equianharmonic(free);
  CHECK(abs_err(u_equianharmonic_rootfree(free),
                u0_constant() + 0.5 * kI * z * gauss_2f1({0.5, 1.0 / 3.0, 4.0 / 3.0}, z * z * z)) < 1e-15);
}

TEST_CASE("hyperelliptic family") {
  const TauPoint tau({0.0, 1.5});
  REQUIRE(u_hyperelliptic_predicate(tau));
  for (int m = 0; m < 3; ++m) {
    CHECK(std::abs(u_hyperelliptic(m + 1, tau)) < std::abs(u_hyperelliptic(m, tau)));
  }
  CHECK_THROWS_AS(u_hyperelliptic(4, tau), DomainError);
  CHECK_THROWS_AS(u_hyperelliptic(-1, tau), DomainError);
  CHECK_THROWS_AS(u_hyperelliptic(0, TauPoint({0.0, 0.015})), DomainNotSupported);

  for (const Complex t : {Complex{0.0, 1.2}, Complex{0.05, 1.5}}) {
    const TauPoint tp(t);
    const DerivativeStencil st = default_schwarz_stencil(tp);
    const Complex z = hauptmodul_hyperelliptic(tp);
    const Complex dz = holomorphic_derivatives([](Complex s) { return hauptmodul_hyperelliptic(TauPoint(s)); }, t,
                                               1, st)[0];
    const Complex inv_w = kI / (sqrt_theta_ratio(tp) * std::sqrt(1.0 - std::pow(z, 4)));
    for (int m = 0; m <= 3; ++m) {
      const Complex dU =
          holomorphic_derivatives([m](Complex s) { return u_hyperelliptic(m, TauPoint(s)); }, t, 1, st)[0];
      CAPTURE(m);
      CHECK(rel_err(dU, std::pow(z, m) * dz * inv_w) < 1e-6);
    }
    // U(0) is the integral of dz / sqrt(z^5 - z) along [0, z]
    const IncompleteIntegralSpec spec{0.5, 0.5, 4, z, IntegralBase::from_zero};
    CHECK(abs_err(u_hyperelliptic(0, tp), oracle_incomplete_integral(spec)) < 1e-8);
  }
}

TEST_CASE("cover constants") {
  const CoverConstants c = CoverConstants::quintic();
  CHECK(c.A == Complex{-1.0, 0.0});
  CHECK(c.B == kI);
  const auto [kp, km] = k_pm(-1.0, kI);
  CHECK(kp == c.k_plus);
  CHECK(km == c.k_minus);
  const Complex sa = std::sqrt(Complex{-1.0, 0.0});
  const Complex sb = std::sqrt(kI);
  const Complex den = 2.0 * (1.0 - kI);
  CHECK(abs_err(kp, -(sa + sb) * (sa + sb) / den) < 1e-15);
  CHECK(abs_err(km, -(sa - sb) * (sa - sb) / den) < 1e-15);
  CHECK_THROWS_AS(k_pm(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(k_pm(0.5, 1.0), DomainError);

  for (const Branch b : {Branch::plus, Branch::minus}) {
    const auto e = c.e_roots(b);
    CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-15);
    const EllipticInvariants inv = cover_invariants(c, b);
    CHECK(abs_err(inv.g2(), 5.0 / 3.0) < 1e-14);
    CHECK(std::abs(std::abs(inv.g3()) - 7.0 * std::sqrt(2.0) / 27.0) < 1e-14);
    CHECK(std::abs(inv.g3().imag()) < 1e-14);
  }
  CHECK(cover_invariants(c, Branch::plus).g3().real() * cover_invariants(c, Branch::minus).g3().real() < 0.0);
}

TEST_CASE("covering map lands on the quotient curves") {
  const CoverConstants c = CoverConstants::quintic();
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> d(-1.6, 1.6);
  for (int j = 0; j < 40; ++j) {
    const Complex x{d(rng), d(rng)};
    for (const Branch b : {Branch::plus, Branch::minus}) {
      const CoverImage im = covering_map(CurvePoint::at(x, b), c);
      const EllipticInvariants inv = cover_invariants(c, b);
      const Complex rhs = 4.0 * im.p * im.p * im.p - inv.g2() * im.p - inv.g3();
      const auto e = c.e_roots(b);
      const Complex factored = 4.0 * (im.p - e[0]) * (im.p - e[1]) * (im.p - e[2]);
      CAPTURE(x);
      CHECK(std::abs(im.p_prime * im.p_prime - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
      CHECK(std::abs(factored - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("branch point x = 0 maps to the first e-root") {
  const CoverConstants c = CoverConstants::quintic();
  for (const Branch b : {Branch::plus, Branch::minus}) {
    const CoverImage im = covering_map(CurvePoint(0.0, 0.0, b), c);
    CHECK(abs_err(im.p, c.e_roots(b)[0]) < 1e-15);
    CHECK(std::abs(im.p_prime) < 1e-15);
    CHECK_THROWS_AS(reduce_differential(CurvePoint(0.0, 0.0, b), c), PoleError);
  }
  CHECK(abs_err(c.e_roots(Branch::plus)[0], Complex{-0.7357022603955159, 0.0}) < 1e-12);
  CHECK(abs_err(c.e_roots(Branch::minus)[0], Complex{-0.2642977396044841, 0.0}) < 1e-12);
}

TEST_CASE("reduced differential") {
  const CoverConstants c = CoverConstants::quintic();
  const CurvePoint p = CurvePoint::at(Complex{0.4, 0.9}, Branch::plus);
  const CurvePoint q{p.x(), -p.y(), Branch::plus};
  CHECK(rel_err(reduce_differential(q, c), -reduce_differential(p, c)) < 1e-15);
  // du/dx ~ (1/2) sqrt((1-A)(1-B)) x^(-3/2)
  const Complex big = 1e6;
  const Complex v = reduce_differential(CurvePoint::at(big, Branch::minus), c);
  CHECK(rel_err(v * principal_power(big, 1.5), 0.5 * c.sqrt_one_minus) < 1e-5);
  CHECK_THROWS_AS(covering_map(CurvePoint::at(c.A, Branch::plus), c), PoleError);
  CHECK_THROWS_AS(covering_map(CurvePoint::at(c.B, Branch::minus), c), PoleError);
}

TEST_CASE("covering map is compatible with the differential") {
  // d wp(u) / dx = wp'(u) du/dx
  const CoverConstants c = CoverConstants::quintic();
  const Complex x0{0.6, 0.5};
  for (const Branch b : {Branch::plus, Branch::minus}) {
    const CurvePoint p0 = CurvePoint::at(x0, b);
    const auto dp = holomorphic_derivatives(
        [&](Complex x) {
          const Complex y = std::sqrt(std::pow(x, 5) - x);
          const Complex yy = std::abs(y - p0.y()) < std::abs(y + p0.y()) ? y : -y;
          return covering_map(CurvePoint(x, yy, b), c).p;
        },
        x0, 1, DerivativeStencil(1e-3, 64))[0];
    CHECK(rel_err(dp, covering_map(p0, c).p_prime * reduce_differential(p0, c)) < 1e-10);
  }
}

TEST_CASE("curve points") {
  CHECK_NOTHROW(CurvePoint(2.0, std::sqrt(30.0), Branch::plus));
  CHECK_THROWS_AS(CurvePoint(2.0, 5.0, Branch::plus), DomainError);
  const CurvePoint p = CurvePoint::at(Complex{-0.3, 0.2}, Branch::minus);
  CHECK(p.sign() == Branch::minus);
  CHECK(std::abs(p.y() * p.y() - (std::pow(p.x(), 5) - p.x())) < 1e-15);
}
