#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "abelian/hypergeometric.hpp"
#include "abelian/modular.hpp"
#include "abelian/uniformization.hpp"
#include "abelian/verify.hpp"
#include "abelian/weierstrass.hpp"

namespace abelian::verify {

namespace {

struct Ctx {
  const RunConfig& config;
  double tolerance;
  bool informational;

  const TruncationPolicy& policy() const { return config.truncation; }
};

using Evaluator = void (*)(VerificationReport&, const Sample&, const Ctx&);

struct Entry {
  IdentityInfo info;
  std::vector<Complex> points;
  bool all_variants;  // shipped points run under every variant, else variant 0
  Evaluator eval;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

std::string cnum(Complex z) { return "[" + num(z.real()) + ", " + num(z.imag()) + "]"; }

TauPoint tau_of(Complex p) {
  if (!(p.imag() >= kMinImTau)) throw DomainNotSupported("Im(tau) below the supported minimum 1e-2");
  return TauPoint(p);
}

DerivativeStencil stencil_for(const Ctx& ctx, TauPoint tau) {
  const DerivativeStencil d = default_schwarz_stencil(tau);
  return DerivativeStencil(ctx.config.stencil_radius.value_or(d.radius()),
                           ctx.config.stencil_nodes.value_or(d.nodes()));
}

void settle(VerificationReport& r, double residual, const Ctx& ctx) {
  r.settle(residual, ctx.tolerance, ctx.informational);
}

const EllipticInvariants& lattice_invariants(int variant) {
  static const EllipticInvariants lemn = EllipticInvariants::lemniscatic();
  static const EllipticInvariants equi = EllipticInvariants::equianharmonic();
  return variant == 0 ? lemn : equi;
}

const WeierstrassLattice& lattice(int variant) {
  return variant == 0 ? lemniscatic_lattice() : equianharmonic_lattice();
}

Branch sign_of(int variant) { return variant == 0 ? Branch::plus : Branch::minus; }

// --- modular identities ----------------------------------------------------

void jacobi_quartic(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const Complex t2 = theta2(tau, ctx.policy());
  const Complex t3 = theta3(tau, ctx.policy());
  const Complex t4 = theta4(tau, ctx.policy());
  const Complex t34 = std::pow(t3, 4);
  settle(r, std::abs(std::pow(t2, 4) + std::pow(t4, 4) - t34) / std::abs(t34), ctx);
}

void eta_shift(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const Complex e = dedekind_eta(tau, ctx.policy());
  const Complex shifted = dedekind_eta(TauPoint(tau.value() + 1.0), ctx.policy());
  settle(r, std::abs(shifted - std::polar(1.0, kPi / 12.0) * e) / std::abs(e), ctx);
}

void sqrt_ratio(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  if (tau.im() / 2.0 < kMinImTau) throw DomainNotSupported("theta2(tau/2) below the supported Im");
  const Complex root = sqrt_theta_ratio(tau, ctx.policy());
  const Complex h = hauptmodul_hyperelliptic(tau, ctx.policy());
  r.metadata["sqrt_theta_ratio"] = cnum(root);
  settle(r, std::abs(root * root - h) / std::abs(h), ctx);
}

// --- Schwarz equations -----------------------------------------------------

void absorb(VerificationReport& r, const VerificationReport& inner, const std::string& prefix = "") {
  for (const auto& [k, v] : inner.metadata) r.metadata[prefix + k] = v;
}

void schwarz_chi(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const auto& pol = ctx.policy();
  const auto inner = schwarz_residual(
      SchwarzEquation::lemniscatic(),
      [&pol](Complex t) { return hauptmodul_lemniscatic(TauPoint(t), pol); }, tau,
      stencil_for(ctx, tau), ctx.tolerance);
  absorb(r, inner);
  settle(r, inner.residual, ctx);
}

void schwarz_z(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const auto& pol = ctx.policy();
  const auto inner = schwarz_residual(
      SchwarzEquation::equianharmonic(),
      [&pol](Complex t) { return hauptmodul_equianharmonic(TauPoint(t), pol); }, tau,
      stencil_for(ctx, tau), ctx.tolerance);
  absorb(r, inner);
  r.metadata["hauptmodul"] = "9 eta(9 tau)^3 / eta(tau)^3 + 1";
  settle(r, inner.residual, ctx);
}

using Uniformizer = Complex (*)(TauPoint, const TruncationPolicy&);
using Predicate = bool (*)(TauPoint, const TruncationPolicy&);

// The torus equation is even in u, so both signs of +-u are checked.
void schwarz_torus(VerificationReport& r, const Sample& s, const Ctx& ctx, const char* id,
                   const EllipticInvariants& inv, Uniformizer u, Predicate predicate) {
  const TauPoint tau = tau_of(s.point);
  const auto& pol = ctx.policy();
  const auto eq = SchwarzEquation::torus_form(
      id, inv, [predicate, &pol](TauPoint t) { return predicate(t, pol); });
  double worst = 0.0;
  for (const Branch b : {Branch::plus, Branch::minus}) {
    const double sg = branch_sign(b);
    const auto inner = schwarz_residual(
        eq, [u, sg, &pol](Complex t) { return sg * u(TauPoint(t), pol); }, tau,
        stencil_for(ctx, tau), ctx.tolerance);
    const std::string prefix = b == Branch::plus ? "plus." : "minus.";
    absorb(r, inner, prefix);
    r.metadata[prefix + "residual"] = num(inner.residual);
    worst = std::max(worst, inner.residual);
  }
  r.metadata["u"] = cnum(u(tau, pol));
  settle(r, worst, ctx);
}

void schwarz_u_lemn(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  schwarz_torus(r, s, ctx, "torus(4,0)", EllipticInvariants::lemniscatic(), u_lemniscatic,
                u_lemniscatic_predicate);
}

void schwarz_u_equi_root(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  schwarz_torus(r, s, ctx, "torus(0,4)", EllipticInvariants::equianharmonic(),
                u_equianharmonic_root, u_equianharmonic_root_predicate);
}

void schwarz_u_equi_rootfree(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  schwarz_torus(r, s, ctx, "torus(0,4)", EllipticInvariants::equianharmonic(),
                u_equianharmonic_rootfree, u_equianharmonic_rootfree_predicate);
}

// --- Weierstrass -----------------------------------------------------------

void wp_diffeq(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const auto& inv = lattice_invariants(s.variant);
  const auto v = lattice(s.variant).values(s.point);
  const Complex rhs = 4.0 * v.p * v.p * v.p - inv.g2() * v.p - inv.g3();
  r.metadata["wp"] = cnum(v.p);
  settle(r, std::abs(v.p_prime * v.p_prime - rhs) / (1.0 + std::pow(std::abs(v.p), 3)), ctx);
}

void wp_roundtrip_lemn(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const Complex u = wp_inverse_lemniscatic(s.point, ctx.policy());
  r.metadata["u"] = cnum(u);
  settle(r, std::abs(lemniscatic_lattice().wp(u) - s.point) / std::max(1.0, std::abs(s.point)), ctx);
}

void wp_roundtrip_equi(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const Complex u = wp_inverse_equianharmonic(s.point, ctx.policy());
  r.metadata["u"] = cnum(u);
  settle(r, std::abs(equianharmonic_lattice().wp(u) - s.point) / std::max(1.0, std::abs(s.point)),
         ctx);
}

constexpr double kU0Digits = 1.402182105325;

void u0_digits(VerificationReport& r, const Sample&, const Ctx& ctx) {
  const Complex u0 = u0_constant();
  r.metadata["u0"] = cnum(u0);
  r.metadata["re_is_zero"] = u0.real() == 0.0 ? "true" : "false";
  settle(r, std::abs(u0.imag() - kU0Digits) + std::abs(u0.real()), ctx);
}

void u0_wp_zero(VerificationReport& r, const Sample&, const Ctx& ctx) {
  const auto v = equianharmonic_lattice().values(u0_constant());
  r.metadata["wp_prime"] = cnum(v.p_prime);
  settle(r, std::abs(v.p), ctx);
}

// u0 =? (i/(2 3^(1/4))) F(3^(1/4)(sqrt3 - 1); (sqrt6 + sqrt2)/4) - 3^(-1/4) K((sqrt3 - 1)/(2 sqrt2))
// under the four readings of the first argument (sine of amplitude or
// amplitude) and of the second (modulus k or parameter m = k^2).
void u0_fk_conventions(VerificationReport& r, const Sample&, const Ctx& ctx) {
  const double s3 = std::sqrt(3.0);
  const double q = std::pow(3.0, 0.25);
  const double arg = q * (s3 - 1.0);
  const double k = (std::sqrt(6.0) + std::sqrt(2.0)) / 4.0;
  const double kk = (s3 - 1.0) / (2.0 * std::sqrt(2.0));
  struct Convention {
    const char* name;
    bool amplitude;
    bool parameter;
  };
  const Convention conventions[] = {{"sine-amplitude/modulus", false, false},
                                    {"amplitude/modulus", true, false},
                                    {"sine-amplitude/parameter", false, true},
                                    {"amplitude/parameter", true, true}};
  const Complex u0 = u0_constant();
  const auto& lat = equianharmonic_lattice();
  const Complex u0_prime = lat.wp_prime(u0);
  double best = INFINITY;
  std::string matches;
  std::string lattice_matches;
  for (const auto& c : conventions) {
    const Complex x = c.amplitude ? Complex{std::sin(arg)} : Complex{arg};
    const Complex mod = c.parameter ? principal_sqrt(k) : Complex{k};
    const Complex mod_k = c.parameter ? principal_sqrt(kk) : Complex{kk};
    const Complex v = kI / (2.0 * q) * elliptic_F(x, mod) - elliptic_K(mod_k) / q;
    const double direct = std::abs(v - u0);
    best = std::min(best, direct);
    const auto w = lat.values(v);
    const std::string key = std::string("convention.") + c.name;
    r.metadata[key + ".value"] = cnum(v);
    r.metadata[key + ".distance"] = num(direct);
    r.metadata[key + ".wp"] = cnum(w.p);
    if (direct <= ctx.tolerance) matches += std::string(matches.empty() ? "" : ", ") + c.name;
    if (std::abs(w.p) <= 1e-9) {
      const char* side = std::abs(w.p_prime + u0_prime) < std::abs(w.p_prime - u0_prime) ? " (-u0)" : " (+u0)";
      lattice_matches += std::string(lattice_matches.empty() ? "" : ", ") + c.name + side;
    }
  }
  r.metadata["match"] = matches.empty() ? "none" : matches;
  r.metadata["match_modulo_sign_and_lattice"] = lattice_matches.empty() ? "none" : lattice_matches;
  settle(r, best, ctx);
}

// --- incomplete integrals --------------------------------------------------

struct Row {
  double alpha;
  double beta;
  int n;
  Complex z;
  IntegralBase base;
};

const std::vector<Row>& eq6_rows() {
  static const std::vector<Row> rows = {{0.5, 0.5, 1, 0.5, IntegralBase::from_zero},
                                        {1.0, 1.0 / 3.0, 1, {0.3, 0.4}, IntegralBase::from_zero},
                                        {0.75, 0.25, 1, -0.6, IntegralBase::from_zero},
                                        {1.5, 0.5, 1, {0.2, -0.7}, IntegralBase::from_zero}};
  return rows;
}

const std::vector<Row>& eq7_rows() {
  static const std::vector<Row> rows = {{0.25, 0.75, 1, 3.0, IntegralBase::from_infinity},
                                        {0.5, 1.0, 1, {-2.0, 1.0}, IntegralBase::from_infinity},
                                        {0.2, 0.5, 1, {0.0, 1.5}, IntegralBase::from_infinity},
                                        {1.0 / 3.0, 1.25, 1, {2.0, -2.0}, IntegralBase::from_infinity}};
  return rows;
}

const std::vector<Row>& eq12_rows() {
  static const std::vector<Row> rows = {
      {0.5, 0.5, 2, 3.0, IntegralBase::from_infinity},
      {0.5, 0.5, 2, 2.0, IntegralBase::from_infinity},
      {1.0, 0.5, 3, {0.5, 0.3}, IntegralBase::from_zero},
      {1.0, 0.5, 3, 2.5, IntegralBase::from_infinity},
      {0.5, 0.5, 4, {0.6, 0.2}, IntegralBase::from_zero},
      {1.5, 0.5, 4, {0.6, 0.2}, IntegralBase::from_zero},
      {2.5, 0.5, 4, {0.6, 0.2}, IntegralBase::from_zero},
      {3.5, 0.5, 4, {0.6, 0.2}, IntegralBase::from_zero}};
  return rows;
}

std::vector<std::string> row_names(const std::vector<Row>& rows) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    out.push_back("alpha=" + num(row.alpha) + " beta=" + num(row.beta) + " n=" + std::to_string(row.n) +
                  (row.base == IntegralBase::from_zero ? " from_zero" : " from_infinity"));
  }
  return out;
}

std::vector<Complex> row_points(const std::vector<Row>& rows) {
  std::vector<Complex> out;
  for (const auto& row : rows) out.push_back(row.z);
  return out;
}

void incomplete_row(VerificationReport& r, const Sample& s, const Ctx& ctx, const std::vector<Row>& rows) {
  const Row& row = rows.at(static_cast<std::size_t>(s.variant));
  const IncompleteIntegralSpec spec{row.alpha, row.beta, row.n, s.point, row.base};
  spec.validate();
  const Complex formula = incomplete_integral_2f1(spec, ctx.policy());
  const Complex oracle = oracle_incomplete_integral(spec);
  r.metadata["formula"] = cnum(formula);
  r.metadata["oracle"] = cnum(oracle);
  settle(r, std::abs(formula - oracle) / (1.0 + std::abs(formula)), ctx);
}

void eq6_oracle(VerificationReport& r, const Sample& s, const Ctx& ctx) { incomplete_row(r, s, ctx, eq6_rows()); }
void eq7_oracle(VerificationReport& r, const Sample& s, const Ctx& ctx) { incomplete_row(r, s, ctx, eq7_rows()); }
void eq12_oracle(VerificationReport& r, const Sample& s, const Ctx& ctx) { incomplete_row(r, s, ctx, eq12_rows()); }

// --- covering map ----------------------------------------------------------

std::vector<Complex> cover_points() {
  std::mt19937 rng(20250101u);
  std::uniform_real_distribution<double> radius(0.2, 2.5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const Complex avoid[] = {0.0, 1.0, -1.0, kI, -kI};
  std::vector<Complex> out;
  while (out.size() < 100) {
    const Complex x = std::polar(radius(rng), angle(rng));
    if (std::all_of(std::begin(avoid), std::end(avoid), [x](Complex a) { return std::abs(x - a) > 0.05; })) {
      out.push_back(x);
    }
  }
  return out;
}

void cover_cubic(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const Branch b = sign_of(s.variant);
  const double sg = branch_sign(b);
  const auto img = covering_map(CurvePoint::at(s.point, b), CoverConstants::quintic());
  const Complex rhs = 4.0 * img.p * img.p * img.p - 5.0 / 3.0 * img.p + sg * 7.0 / 27.0 * std::sqrt(2.0);
  r.metadata["P"] = cnum(img.p);
  settle(r, std::abs(img.p_prime * img.p_prime - rhs) / (1.0 + std::pow(std::abs(img.p), 3)), ctx);
}

void cover_factored(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const Branch b = sign_of(s.variant);
  const double sg = branch_sign(b);
  const double r2 = std::sqrt(2.0);
  const auto img = covering_map(CurvePoint::at(s.point, b), CoverConstants::quintic());
  const Complex rhs = 4.0 * (img.p + (3.0 + sg * r2) / 6.0) * (img.p - sg * r2 / 3.0) *
                      (img.p - (3.0 - sg * r2) / 6.0);
  settle(r, std::abs(img.p_prime * img.p_prime - rhs) / (1.0 + std::pow(std::abs(img.p), 3)), ctx);
}

Complex nearest_root(Complex x, Complex reference) {
  const Complex y = principal_sqrt(x * x * x * x * x - x);
  return std::abs(y - reference) <= std::abs(y + reference) ? y : -y;
}

const WeierstrassLattice& cover_lattice(Branch b) {
  static const WeierstrassLattice plus(cover_invariants(CoverConstants::quintic(), Branch::plus));
  static const WeierstrassLattice minus(cover_invariants(CoverConstants::quintic(), Branch::minus));
  return b == Branch::plus ? plus : minus;
}

// Integrates du along a short arc starting next to the pole x = A and
// compares with the increment of u obtained by Newton-inverting wp on the
// quotient lattice along the same arc.
void du_reduction(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const Branch b = sign_of(s.variant);
  const CoverConstants c = CoverConstants::quintic();
  const WeierstrassLattice& lat = cover_lattice(b);
  const Complex x2 = s.point;
  const Complex dir = (x2 - c.A) / std::abs(x2 - c.A);
  const Complex x1 = c.A + 0.05 * dir;
  constexpr int kSteps = 64;
  std::vector<Complex> xs(kSteps + 1);
  std::vector<Complex> ys(kSteps + 1);
  for (int j = 0; j <= kSteps; ++j) xs[static_cast<std::size_t>(j)] = x1 + (x2 - x1) * (double(j) / kSteps);
  ys[0] = principal_sqrt(std::pow(x1, 5) - x1);
  for (std::size_t j = 1; j < ys.size(); ++j) ys[j] = nearest_root(xs[j], ys[j - 1]);

  Complex integral{};
  for (std::size_t j = 0; j < kSteps; ++j) {
    const Complex xa = xs[j];
    const Complex ya = ys[j];
    const Complex span = xs[j + 1] - xa;
    const Complex dy = ys[j + 1] - ya;
    auto f = [&](Complex x) {
      const Complex t = (x - xa) / span;
      return reduce_differential(CurvePoint(x, nearest_root(x, ya + t * dy), b), c);
    };
    integral += integrate(f, Polyline::segment(xa, xs[j + 1]), 1e-13).value;
  }

  auto image = [&](std::size_t j) { return covering_map(CurvePoint(xs[j], ys[j], b), c); };
  auto newton = [&](Complex u, Complex target) {
    for (int it = 0; it < 60; ++it) {
      const auto v = lat.values(u);
      const Complex step = (v.p - target) / v.p_prime;
      u -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(u))) break;
    }
    return u;
  };
  const auto first = image(0);
  Complex u = 1.0 / principal_sqrt(first.p);
  if (std::abs(lat.wp_prime(u) - first.p_prime) > std::abs(lat.wp_prime(-u) - first.p_prime)) u = -u;
  u = newton(u, first.p);
  const Complex u_start = u;
  for (std::size_t j = 1; j < xs.size(); ++j) u = newton(u, image(j).p);
  const auto last = image(kSteps);
  const Complex delta = u - u_start;
  const double mismatch = std::abs(lat.wp_prime(u) - last.p_prime) / (1.0 + std::abs(last.p_prime));
  r.metadata["x_start"] = cnum(x1);
  r.metadata["integral"] = cnum(integral);
  r.metadata["delta_u"] = cnum(delta);
  r.metadata["wp_prime_mismatch"] = num(mismatch);
  settle(r, std::max(std::abs(integral - delta) / (1.0 + std::abs(delta)), mismatch), ctx);
}

// --- hyperelliptic family --------------------------------------------------

void u_derivative(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const auto& pol = ctx.policy();
  const int m = s.variant;
  if (!u_hyperelliptic_predicate(tau, pol)) throw DomainNotSupported("outside |theta2/theta3|^4 <= 0.95");
  const DerivativeStencil st = stencil_for(ctx, tau);
  const Complex dU = holomorphic_derivatives(
      [m, &pol](Complex t) { return u_hyperelliptic(m, TauPoint(t), pol); }, tau.value(), 1, st)[0];
  const Complex dz = holomorphic_derivatives(
      [&pol](Complex t) { return hauptmodul_hyperelliptic(TauPoint(t), pol); }, tau.value(), 1, st)[0];
  const Complex z = hauptmodul_hyperelliptic(tau, pol);
  const Complex inv_w = kI / (sqrt_theta_ratio(tau, pol) * principal_sqrt(1.0 - std::pow(z, 4)));
  const Complex rhs = std::pow(z, m) * dz * inv_w;
  r.metadata["dU"] = cnum(dU);
  r.metadata["rhs"] = cnum(rhs);
  r.metadata["stencil.radius"] = num(st.radius());
  r.metadata["stencil.nodes"] = std::to_string(st.nodes());
  settle(r, std::abs(dU - rhs) / std::abs(rhs), ctx);
}

void u_quadrature(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const TauPoint tau = tau_of(s.point);
  const auto& pol = ctx.policy();
  const int m = s.variant;
  const Complex value = u_hyperelliptic(m, tau, pol);
  const Complex z = hauptmodul_hyperelliptic(tau, pol);
  // integral of z^m dz / sqrt(z^5 - z) = i z^(m - 1/2) (1 - z^4)^(-1/2) dz from 0
  const IncompleteIntegralSpec spec{m + 0.5, 0.5, 4, z, IntegralBase::from_zero};
  const Complex oracle = oracle_incomplete_integral(spec, default_oracle_path(spec), 1e-13);
  r.metadata["U"] = cnum(value);
  r.metadata["oracle"] = cnum(oracle);
  r.metadata["path"] = "segment [0, theta2/theta3]";
  settle(r, std::abs(value - oracle) / (1.0 + std::abs(value)), ctx);
}

// --- second and third kind -------------------------------------------------

// w = -2 z^(3/2) sqrt(1 - eps), eps = g2/(4 z^2) + g3/(4 z^3): the branch of
// wp'(u) on which u ~ z^(-1/2) as z -> infinity.
Complex explicit_w(Complex z, const EllipticInvariants& inv) {
  const Complex eps = inv.g2() / (4.0 * z * z) + inv.g3() / (4.0 * z * z * z);
  return -2.0 * principal_power(z, 1.5) * principal_sqrt(1.0 - eps);
}

// II(z) = -sqrt z + int_inf^z (z/w + z^(-1/2)/2) dz, on the ray z/s, s in (0, 1].
Complex second_kind_oracle(Complex z_end, const EllipticInvariants& inv) {
  const Complex root = principal_sqrt(z_end);
  auto f = [&](Complex sc) {
    const double s = sc.real();
    const Complex eps = inv.g2() * (s * s) / (4.0 * z_end * z_end) +
                        inv.g3() * (s * s * s) / (4.0 * z_end * z_end * z_end);
    const Complex w = principal_sqrt(1.0 - eps);
    return 0.5 * root * eps * std::pow(s, -1.5) / (w * (1.0 + w));
  };
  return -root + integrate(f, Polyline::segment(0.0, 1.0), 1e-13).value;
}

void ii_oracle(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const auto& inv = lattice_invariants(s.variant);
  const Complex value = integral_second_kind(s.point, inv, Branch::plus, ctx.policy());
  const Complex oracle = second_kind_oracle(s.point, inv);
  r.metadata["II"] = cnum(value);
  r.metadata["oracle"] = cnum(oracle);
  r.metadata["path"] = "ray from infinity";
  settle(r, std::abs(value - oracle) / (1.0 + std::abs(value)), ctx);
}

constexpr double kThirdKindAlpha = 0.5;

void iii_oracle(VerificationReport& r, const Sample& s, const Ctx& ctx) {
  const auto& inv = lattice_invariants(s.variant);
  const auto& lat = lattice(s.variant);
  const ThirdKindParam p{kThirdKindAlpha};
  const Complex z = s.point;
  const Complex z_ref = z * Complex{1.0, 0.5};
  const Complex value = integral_third_kind(z, p, inv, Branch::plus, ctx.policy());
  const Complex ref = integral_third_kind(z_ref, p, inv, Branch::plus, ctx.policy());
  const auto a = lat.values(p.alpha_point);
  auto f = [&](Complex t) {
    const Complex w = explicit_w(t, inv);
    return 0.5 * (w + a.p_prime) / ((t - a.p) * w);
  };
  const Complex oracle = integrate(f, Polyline::segment(z_ref, z), 1e-13).value;
  Complex diff = value - ref - oracle;
  const double shift = std::round(diff.imag() / (2.0 * kPi));
  diff -= Complex{0.0, 2.0 * kPi * shift};
  r.metadata["III"] = cnum(value);
  r.metadata["z_ref"] = cnum(z_ref);
  r.metadata["oracle"] = cnum(oracle);
  r.metadata["alpha"] = num(kThirdKindAlpha);
  r.metadata["log_branch_shift"] = num(shift);
  settle(r, std::abs(diff) / (1.0 + std::abs(value)), ctx);
}

// --- registry --------------------------------------------------------------

std::vector<Complex> tau_axis(double re, std::initializer_list<double> ims) {
  std::vector<Complex> out;
  for (const double t : ims) out.emplace_back(re, t);
  return out;
}

const std::vector<std::string> kNoVariant = {""};
const std::vector<std::string> kLattices = {"(4,0)", "(0,4)"};
const std::vector<std::string> kSigns = {"plus", "minus"};
const std::vector<std::string> kM = {"m=0", "m=1", "m=2", "m=3"};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    const std::vector<Complex> modular = {{0.0, 1.0}, {0.3, 0.8}, {-0.4, 0.5}, {0.0, 1.2}, {0.5, 0.3}, {-0.25, 1.7}};
    const std::vector<Complex> wp_points = {{0.3, 0.2}, {-0.7, 0.4}, {1.1, -0.3}, {0.2, 1.3}, {-1.6, -0.9},
                                            {2.3, 0.4}, {0.05, 0.02}, {-0.4, -1.9}, {3.1, 2.2}, {1.7, 1.7}};
    const std::vector<Complex> hyper_tau = {{0.0, 1.5}, {0.0, 1.2}, {0.05, 1.5}, {-0.05, 1.8}};
    const std::vector<Complex> ii_points = {3.0, {2.5, 1.0}, {-2.0, 2.0}, {0.0, 4.0}, {-3.0, 0.5}};
    const std::vector<Complex> iii_points = {3.0, {2.5, 1.0}, {-2.0, 2.0}, {0.0, 4.0}};
    using P = PointKind;
    return std::vector<Entry>{
        {{"jacobi-quartic", "theta2^4 + theta4^4 = theta3^4", 1e-12, false, P::tau, kNoVariant}, modular, true, jacobi_quartic},
        {{"eta-shift", "eta(tau + 1) = exp(i pi/12) eta(tau)", 1e-12, false, P::tau, kNoVariant}, modular, true, eta_shift},
        {{"sqrt-ratio", "(sqrt2 theta2(tau)/theta2(tau/2))^2 = theta2/theta3", 1e-12, false, P::tau, kNoVariant}, modular, true, sqrt_ratio},
        {{"schwarz-chi", "[chi, tau] = -(chi^2 + 1)^2 / (2 (chi^3 - chi)^2)", 1e-8, false, P::tau, kNoVariant},
         {{0.0, 1.2}, {0.1, 1.2}, {-0.1, 1.2}, {0.0, 1.1}, {0.0, 1.3}}, true, schwarz_chi},
        {{"schwarz-z", "[z, tau] = -z (z^3 + 8) / (2 (z^3 - 1)^2)", 1e-8, false, P::tau, kNoVariant},
         {{0.0, 1.1}, {0.05, 1.1}, {-0.05, 1.1}, {0.0, 1.0}, {0.0, 1.2}}, true, schwarz_z},
        {{"schwarz-u-lemn", "[u, tau] = -2 wp(2u; 4, 0) for the lemniscatic u(tau)", 1e-7, false, P::tau, kNoVariant},
         {{1.0, 0.8}, {1.0, 0.9}, {-1.0, 0.85}, {1.0, 0.75}, {0.98, 0.8}}, true, schwarz_u_lemn},
        {{"schwarz-u-equi-root", "[u, tau] = -2 wp(2u; 0, 4) for z^(-1/2) 2F1(1/2, 1/6; 7/6 | z^-3)", 1e-7, false, P::tau, kNoVariant},
         tau_axis(0.0, {0.5, 0.6, 0.7, 0.8, 0.9}), true, schwarz_u_equi_root},
        {{"schwarz-u-equi-rootfree", "[u, tau] = -2 wp(2u; 0, 4) for u0 + (i/2) z 2F1(1/2, 1/3; 4/3 | z^3)", 1e-7, false, P::tau, kNoVariant},
         tau_axis(0.5, {0.5, 0.6, 0.7, 0.8, 0.9}), true, schwarz_u_equi_rootfree},
        {{"wp-diffeq", "wp'^2 = 4 wp^3 - g2 wp - g3", 1e-9, false, P::u, kLattices}, wp_points, true, wp_diffeq},
        {{"wp-roundtrip-lemn", "wp(wp_inverse_lemniscatic(x); 4, 0) = x", 1e-9, false, P::x, kNoVariant},
         {3.0, {2.0, 1.0}, {-1.5, 0.5}, {0.0, 1.1}, {-2.0, -2.0}, 5.0, {1.2, -0.8}, {0.0, -4.0}, {10.0, 3.0}, 1.05},
         true, wp_roundtrip_lemn},
        {{"wp-roundtrip-equi", "wp(wp_inverse_equianharmonic(z); 0, 4) = z", 1e-9, false, P::z, kNoVariant},
         {2.0, {1.5, 1.0}, {-1.3, 0.4}, {0.0, 1.05}, {-2.0, -2.0}, 4.0, {1.1, -0.7}, {0.0, -3.0}, {8.0, 2.0}, 1.03},
         true, wp_roundtrip_equi},
        {{"u0-digits", "u0 = i B(1/6, 1/3)/6 = i 1.402182105325", 5e-12, false, P::none, kNoVariant}, {0.0}, true, u0_digits},
        {{"u0-wp-zero", "wp(u0; 0, 4) = 0", 1e-9, false, P::none, kNoVariant}, {0.0}, true, u0_wp_zero},
        {{"u0-fk-conventions", "u0 through incomplete and complete elliptic integrals", 1e-9, true, P::none, kNoVariant},
         {0.0}, true, u0_fk_conventions},
        {{"eq6-oracle", "int_0^z u^(alpha-1) (u-1)^(-beta) du against 2F1", 1e-9, false, P::z, row_names(eq6_rows())},
         row_points(eq6_rows()), false, eq6_oracle},
        {{"eq7-oracle", "int_inf^z u^(alpha-1) (u-1)^(-beta) du against 2F1", 1e-9, false, P::z, row_names(eq7_rows())},
         row_points(eq7_rows()), false, eq7_oracle},
        {{"eq12-oracle", "int u^(alpha-1) (u^n-1)^(-beta) du against 2F1", 1e-9, false, P::z, row_names(eq12_rows())},
         row_points(eq12_rows()), false, eq12_oracle},
        {{"cover-cubic", "P'^2 = 4P^3 - (5/3)P +- (7/27) sqrt2", 1e-9, false, P::x, kSigns}, cover_points(), true, cover_cubic},
        {{"cover-factored", "P'^2 = 4(P + (3+-sqrt2)/6)(P -+ sqrt2/3)(P - (3-+sqrt2)/6)", 1e-9, false, P::x, kSigns},
         cover_points(), true, cover_factored},
        {{"du-reduction", "du = sqrt((1-A)(1-B)) (x -+ sqrt(AB)) dx / (2y)", 1e-7, false, P::x, kSigns},
         {-0.7, {-1.0, 0.3}, {-0.75, -0.2}, {-1.25, 0.15}}, true, du_reduction},
        {{"U-derivative", "dU/dtau = z^m z' / sqrt(z^5 - z), z = theta2/theta3", 1e-6, false, P::tau, kM},
         hyper_tau, true, u_derivative},
        {{"U-quadrature", "U(m, tau) = int_0^z u^m du / sqrt(u^5 - u)", 1e-8, false, P::tau, kM},
         {{0.0, 1.5}, {0.0, 1.2}, {0.05, 1.6}}, false, u_quadrature},
        {{"II-oracle", "-zeta(u) = int_inf^z z dz / w", 1e-8, false, P::z, kLattices}, ii_points, true, ii_oracle},
        {{"III-oracle", "log(sigma(u-a)/sigma(u)) + zeta(a) u = int (w + wp'(a)) dz / (2 (z - wp(a)) w)", 1e-8,
          false, P::z, kLattices},
         iii_points, true, iii_oracle},
    };
  }();
  return table;
}

const Entry& entry_for(const IdentityInfo& info) {
  for (const auto& e : entries()) {
    if (e.info.id == info.id) return e;
  }
  throw ConfigError("unknown identity '" + info.id + "'");
}

bool has_m_variants(const IdentityInfo& info) { return info.variants == kM; }

}  // namespace

const std::vector<IdentityInfo>& registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const auto& info : registry()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::vector<Sample> expand(const IdentityInfo& info, const std::vector<Complex>& points,
                           const RunConfig& config) {
  std::vector<Sample> out;
  for (const Complex p : points) {
    for (int v = 0; v < static_cast<int>(info.variants.size()); ++v) {
      if (config.m && has_m_variants(info) && v != *config.m) continue;
      out.push_back({p, v});
    }
  }
  return out;
}

std::vector<Sample> samples_for(const IdentityInfo& info, const RunConfig& config) {
  if (const auto it = config.grid.find(info.id); it != config.grid.end()) {
    return expand(info, it->second, config);
  }
  const Entry& e = entry_for(info);
  if (e.all_variants) return expand(info, e.points, config);
  std::vector<Sample> out;
  for (std::size_t j = 0; j < e.points.size(); ++j) {
    int variant = has_m_variants(info) ? config.m.value_or(0) : static_cast<int>(j);
    out.push_back({e.points[j], variant});
  }
  return out;
}

VerificationReport evaluate(const IdentityInfo& info, const Sample& sample, const RunConfig& config) {
  const Entry& e = entry_for(info);
  VerificationReport r;
  r.identity_id = info.id;
  r.point = sample.point;
  const Ctx ctx{config, config.tolerance_for(info), config.informational(info)};
  r.tolerance = ctx.tolerance;
  if (!info.variants.at(static_cast<std::size_t>(sample.variant)).empty()) {
    r.metadata["variant"] = info.variants[static_cast<std::size_t>(sample.variant)];
  }
  r.metadata["tolerance"] = num(ctx.tolerance);
  r.metadata["truncation.rel_tol"] = num(config.truncation.rel_tol);
  r.metadata["truncation.max_terms"] = std::to_string(config.truncation.max_terms);
  r.metadata["mode"] = ctx.informational ? "report-only" : "asserting";
  try {
    e.eval(r, sample, ctx);
  } catch (const DomainNotSupported& ex) {
    r.status = ReportStatus::skipped;
    r.metadata["reason"] = ex.what();
  } catch (const DomainError& ex) {
    r.status = ReportStatus::skipped;
    r.metadata["reason"] = ex.what();
  } catch (const Error& ex) {
    r.status = ReportStatus::error;
    r.metadata["error"] = ex.kind();
    r.metadata["reason"] = ex.what();
  } catch (const std::exception& ex) {
    r.status = ReportStatus::error;
    r.metadata["error"] = "exception";
    r.metadata["reason"] = ex.what();
  }
  return r;
}

}  // namespace abelian::verify
