#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include "abelian/kernels/reduce.hpp"
#include "abelian/weierstrass.hpp"

namespace abelian {

EllipticInvariants::EllipticInvariants(Complex g2, Complex g3) : g2_(g2), g3_(g3) {
  if (!is_finite(g2) || !is_finite(g3)) throw DomainError("invariants must be finite");
  const Complex delta = discriminant();
  const double scale = std::pow(std::abs(g2), 3) + 27.0 * std::norm(g3);
  if (std::abs(delta) <= 1e-14 * scale || delta == Complex{}) {
    throw DomainError("degenerate cubic: g2^3 - 27 g3^2 = 0");
  }
}

namespace {

constexpr int kLaurentTerms = 64;    // c_2 .. c_65
constexpr int kSigmaMaxDegree = 161;  // odd powers up to u^161
constexpr int kMaxHalvings = 60;

using LongComplex = std::complex<long double>;

std::vector<Complex> compute_laurent(const EllipticInvariants& inv) {
  // c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}
  std::vector<Complex> c(static_cast<std::size_t>(kLaurentTerms + 2));
  c[2] = inv.g2() / 20.0;
  c[3] = inv.g3() / 28.0;
  for (int k = 4; k < kLaurentTerms + 2; ++k) {
    Complex s{};
    for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
    c[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
  }
  return {c.begin() + 2, c.end()};
}

// Root test on c_k = (2k - 1) G_2k, G_2k ~ (number of nearest points) R^(-2k).
double estimate_lattice_radius(const std::vector<Complex>& c) {
  double estimate = 0.0;
  bool found = false;
  const int last = static_cast<int>(c.size()) + 1;
  for (int k = last - 16; k <= last; ++k) {
    const double mag = std::abs(c[static_cast<std::size_t>(k - 2)]) / (2.0 * k - 1.0);
    if (mag == 0.0 || !std::isfinite(mag)) continue;
    const double r = std::pow(mag, -1.0 / (2.0 * k));
    if (!found || r < estimate) estimate = r;
    found = true;
  }
  if (!found) throw DomainError("could not estimate the lattice radius");
  return estimate;
}

// Weierstrass' recursion for sigma = sum a_mn (g2/2)^m (2 g3)^n u^(4m+6n+1)/(4m+6n+1)!
std::vector<Complex> sigma_coefficients(const EllipticInvariants& inv) {
  const int max_weight = (kSigmaMaxDegree - 1) / 2;  // 2m + 3n
  std::map<std::pair<int, int>, long double> a;
  auto get = [&](int m, int n) -> long double {
    if (m < 0 || n < 0) return 0.0L;
    auto it = a.find({m, n});
    return it == a.end() ? 0.0L : it->second;
  };
  a[{0, 0}] = 1.0L;
  for (int w = 1; w <= max_weight; ++w) {
    for (int n = 0; 3 * n <= w; ++n) {
      if ((w - 3 * n) % 2 != 0) continue;
      const int m = (w - 3 * n) / 2;
      const long double value = 3.0L * (m + 1) * get(m + 1, n - 1) +
                                16.0L / 3.0L * (n + 1) * get(m - 2, n + 1) -
                                1.0L / 3.0L * (2 * m + 3 * n - 1) * (4 * m + 6 * n - 1) * get(m - 1, n);
      a[{m, n}] = value;
    }
  }
  const LongComplex half_g2 = LongComplex(inv.g2().real(), inv.g2().imag()) / 2.0L;
  const LongComplex twice_g3 = LongComplex(inv.g3().real(), inv.g3().imag()) * 2.0L;
  std::vector<LongComplex> acc(static_cast<std::size_t>(max_weight + 1));
  for (const auto& [mn, value] : a) {
    const auto [m, n] = mn;
    const int degree = 4 * m + 6 * n + 1;
    long double factorial = 1.0L;
    for (int j = 2; j <= degree; ++j) factorial *= j;
    const LongComplex term = value * std::pow(half_g2, m) * std::pow(twice_g3, n) / factorial;
    acc[static_cast<std::size_t>((degree - 1) / 2)] += term;
  }
  std::vector<Complex> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) {
    out[j] = {static_cast<double>(acc[j].real()), static_cast<double>(acc[j].imag())};
  }
  return out;
}

void check_pole(Complex p, Complex u) {
  if (!is_finite(p) || std::abs(p) > WeierstrassLattice::kPoleThreshold) {
    throw PoleError("wp: argument at or near a lattice point", u);
  }
}

}  // namespace

WeierstrassLattice::WeierstrassLattice(EllipticInvariants invariants)
    : invariants_(invariants), laurent_(compute_laurent(invariants)) {
  lattice_radius_ = estimate_lattice_radius(laurent_);
  laurent_derivative_.resize(laurent_.size());
  for (std::size_t i = 0; i < laurent_.size(); ++i) {
    const double k = double(i) + 2.0;
    laurent_derivative_[i] = laurent_[i] * (2.0 * k - 2.0);
  }
  sigma_ = sigma_coefficients(invariants);
}

WeierstrassValues WeierstrassLattice::series_values(Complex v) const {
  const Complex v2 = v * v;
  std::vector<Complex> powers(laurent_.size());
  Complex power = v2;  // v^(2k-2) for k = 2
  for (auto& p : powers) {
    p = power;
    power *= v2;
  }
  const Complex p = 1.0 / v2 + kernels::dot(laurent_, powers);
  const Complex dp = -2.0 / (v2 * v) + kernels::dot(laurent_derivative_, powers) / v;
  return {p, dp};
}

WeierstrassValues WeierstrassLattice::values(Complex u) const {
  if (!is_finite(u)) throw DomainError("wp: non-finite argument");
  if (u == Complex{}) throw PoleError("wp: pole at u = 0", u);
  Complex v = u;
  int halvings = 0;
  while (std::abs(v) > series_radius()) {
    v *= 0.5;
    if (++halvings > kMaxHalvings) throw DomainError("wp: argument too large");
  }
  WeierstrassValues w = series_values(v);
  check_pole(w.p, u);
  const Complex half_g2 = 0.5 * invariants_.g2();
  for (int i = 0; i < halvings; ++i) {
    // wp(2v) = -2 wp + (wp''/(2 wp'))^2, with wp'' = 6 wp^2 - g2/2, wp''' = 12 wp wp'
    const Complex p2 = 6.0 * w.p * w.p - half_g2;
    const Complex p3 = 12.0 * w.p * w.p_prime;
    const Complex ratio = p2 / (2.0 * w.p_prime);
    const Complex next_p = -2.0 * w.p + ratio * ratio;
    const Complex next_dp =
        -w.p_prime + ratio * (p3 * w.p_prime - p2 * p2) / (2.0 * w.p_prime * w.p_prime);
    w = {next_p, next_dp};
    check_pole(w.p, u);
  }
  if (!is_finite(w.p_prime)) throw PoleError("wp': argument at or near a lattice point", u);
  return w;
}

Complex WeierstrassLattice::sigma_series(Complex u) const {
  const Complex u2 = u * u;
  std::vector<Complex> powers(sigma_.size());
  Complex power = u;
  for (auto& p : powers) {
    p = power;
    power *= u2;
  }
  return kernels::dot(sigma_, powers);
}

Complex WeierstrassLattice::sigma(Complex u) const {
  if (!is_finite(u)) throw DomainError("sigma: non-finite argument");
  if (std::abs(u) >= validated_radius()) {
    throw DomainNotSupported("sigma: |u| outside the validated disk of radius " +
                             std::to_string(validated_radius()));
  }
  return sigma_series(u);
}

Complex WeierstrassLattice::zeta(Complex u) const {
  const Complex s = sigma(u);
  if (s == Complex{}) throw PoleError("zeta: pole at a lattice point", u);
  const DerivativeStencil ring(0.25 * lattice_radius_, 64);
  const Complex ds =
      holomorphic_derivatives([this](Complex w) { return sigma_series(w); }, u, 1, ring)[0];
  return require_finite(ds / s, "zeta");
}

const WeierstrassLattice& lemniscatic_lattice() {
  static const WeierstrassLattice lattice(EllipticInvariants::lemniscatic());
  return lattice;
}

const WeierstrassLattice& equianharmonic_lattice() {
  static const WeierstrassLattice lattice(EllipticInvariants::equianharmonic());
  return lattice;
}

namespace {

template <typename Fn>
auto with_lattice(const EllipticInvariants& inv, Fn&& fn) {
  if (inv == EllipticInvariants::lemniscatic()) return fn(lemniscatic_lattice());
  if (inv == EllipticInvariants::equianharmonic()) return fn(equianharmonic_lattice());
  return fn(WeierstrassLattice(inv));
}

}  // namespace

Complex wp(Complex u, const EllipticInvariants& inv) {
  return with_lattice(inv, [&](const WeierstrassLattice& l) { return l.wp(u); });
}

Complex wp_prime(Complex u, const EllipticInvariants& inv) {
  return with_lattice(inv, [&](const WeierstrassLattice& l) { return l.wp_prime(u); });
}

Complex weier_zeta(Complex u, const EllipticInvariants& inv) {
  return with_lattice(inv, [&](const WeierstrassLattice& l) { return l.zeta(u); });
}

Complex weier_sigma(Complex u, const EllipticInvariants& inv) {
  return with_lattice(inv, [&](const WeierstrassLattice& l) { return l.sigma(u); });
}

}  // namespace abelian
