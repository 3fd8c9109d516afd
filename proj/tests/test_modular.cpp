#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "abelian/modular.hpp"
#include "support.hpp"

using namespace abelian;
using testing::abs_err;
using testing::rel_err;

namespace {

// Independent references: symmetric theta sums over |k| <= 60 in q =
// exp(i pi tau) and the raw eta product over 400 factors.
Complex theta_direct(int which, Complex tau) {
  Complex s{};
  for (int k = -60; k <= 60; ++k) {
    if (which == 2) {
      s += std::exp(kI * kPi * tau * double(k * k + k));
    } else {
      const double sign = (which == 4 && (k % 2 != 0)) ? -1.0 : 1.0;
      s += sign * std::exp(kI * kPi * tau * double(k * k));
    }
  }
  return which == 2 ? std::exp(kI * kPi * tau / 4.0) * s : s;
}

Complex eta_product(Complex tau) {
  Complex p = 1.0;
  const Complex q = std::exp(2.0 * kPi * kI * tau);
  Complex qk = q;
  for (int k = 1; k <= 400; ++k) {
    p *= 1.0 - qk;
    qk *= q;
  }
  return std::exp(kI * kPi * tau / 12.0) * p;
}

const std::vector<Complex> kGrid = {{0.0, 1.0}, {0.3, 0.8}, {-0.4, 0.5}, {0.0, 1.2},
                                    {0.5, 0.3}, {-0.25, 1.7}, {1.7, 0.45}, {0.1, 3.0}};

TauPoint T(double re, double im) { return TauPoint(Complex{re, im}); }

}  // namespace

TEST_CASE("TauPoint rejects the lower half-plane") {
  CHECK_THROWS_AS(TauPoint(Complex{0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(TauPoint(Complex{0.5, -1.0}), DomainError);
  CHECK(T(0.2, 0.7).im() == 0.7);
}

TEST_CASE("theta constants at tau = i") {
  // closed forms pi^(1/4)/Gamma(3/4) and 2^(-1/4) of it
  const double t3 = std::pow(kPi, 0.25) / std::tgamma(0.75);
  CHECK(abs_err(theta3(T(0, 1)), t3) < 1e-14);
  CHECK(abs_err(theta3(T(0, 1)), 1.086434811213308) < 1e-14);
  CHECK(abs_err(theta2(T(0, 1)), 0.91357913815611682) < 1e-14);
  CHECK(abs_err(theta2(T(0, 1)), t3 * std::pow(2.0, -0.25)) < 1e-14);
  CHECK(abs_err(theta2(T(0, 1)), theta4(T(0, 1))) < 1e-15);
}

TEST_CASE("theta constants against direct sums") {
  for (const Complex tau : kGrid) {
    CAPTURE(tau);
    CHECK(rel_err(theta2(TauPoint(tau)), theta_direct(2, tau)) < 1e-13);
    CHECK(rel_err(theta3(TauPoint(tau)), theta_direct(3, tau)) < 1e-13);
    CHECK(rel_err(theta4(TauPoint(tau)), theta_direct(4, tau)) < 1e-13);
  }
}

TEST_CASE("theta phase and limits") {
  const Complex tau0{0.3, 0.6};
  CHECK(rel_err(theta2(TauPoint(tau0 + 2.0)), kI * theta2(TauPoint(tau0))) < 1e-13);
  CHECK(std::abs(theta2(T(0, 40))) < 1e-12);
  CHECK(abs_err(theta4(T(0, 40)), 1.0) < 1e-15);
  CHECK(abs_err(theta3(T(0.3, 40)), 1.0) < 1e-15);
}

TEST_CASE("Jacobi quartic identity") {
  for (const Complex tau : kGrid) {
    if (tau.imag() < 0.3) continue;
    CAPTURE(tau);
    const TauPoint t(tau);
    const Complex t34 = std::pow(theta3(t), 4);
    CHECK(std::abs(std::pow(theta2(t), 4) + std::pow(theta4(t), 4) - t34) < 1e-12 * std::abs(t34));
  }
}

TEST_CASE("periodicities") {
  for (const Complex tau : kGrid) {
    CAPTURE(tau);
    CHECK(rel_err(theta3(TauPoint(tau + 2.0)), theta3(TauPoint(tau))) < 1e-12);
    CHECK(rel_err(theta4(TauPoint(tau + 2.0)), theta4(TauPoint(tau))) < 1e-12);
    CHECK(rel_err(dedekind_eta(TauPoint(tau + 1.0)), std::polar(1.0, kPi / 12.0) * dedekind_eta(TauPoint(tau))) <
          1e-12);
  }
}

TEST_CASE("eta values") {
  // Gamma(1/4) / (2 pi^(3/4)); the eta(2i) digits come from the product
  // oracle in tests/oracles/freeze_oracles.py
  const double eta_i = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  CHECK(abs_err(dedekind_eta(T(0, 1)), eta_i) < 1e-14);
  CHECK(abs_err(dedekind_eta(T(0, 1)), 0.76822542232605666) < 1e-14);
  CHECK(abs_err(dedekind_eta(T(0, 2)), 0.59238278133241589) < 1e-14);
  for (const Complex tau : kGrid) {
    CAPTURE(tau);
    CHECK(rel_err(dedekind_eta(TauPoint(tau)), eta_product(tau)) < 1e-13);
  }
}

TEST_CASE("minimum Im(tau)") {
  CHECK_NOTHROW(theta3(T(0.1, 0.011)));
  CHECK_THROWS_AS(theta3(T(0.1, 0.009)), AccuracyError);
  CHECK_THROWS_AS(dedekind_eta(T(0.0, 0.005)), AccuracyError);
  CHECK_THROWS_AS(sqrt_theta_ratio(T(0.0, 0.015)), AccuracyError);
}

TEST_CASE("truncation policy limit") {
  CHECK_THROWS_AS(theta3(T(0.0, 0.02), TruncationPolicy{1e-16, 5}), AccuracyError);
}

TEST_CASE("lemniscatic Hauptmodul") {
  CHECK(abs_err(hauptmodul_lemniscatic(T(0, 1)), 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(hauptmodul_lemniscatic(T(0, 30))) < 1e-10);
  const Complex chi = hauptmodul_lemniscatic(T(1, 0.8));
  CHECK(std::abs(chi) > 1.0);
  CHECK(abs_err(chi, Complex{0.0, 1.642170883913018}) < 1e-13);
}

TEST_CASE("equianharmonic Hauptmodul") {
  CHECK(abs_err(hauptmodul_equianharmonic(T(0, 8)), 1.0) < 1e-20 + 1e-15);
  // tau = i/3 is fixed by tau -> -1/(9 tau); the value is 1 + sqrt 3
  CHECK(abs_err(hauptmodul_equianharmonic(T(0, 1.0 / 3.0)), 1.0 + std::sqrt(3.0)) < 1e-13);
  const Complex z = hauptmodul_equianharmonic(T(0.5, 1.0));
  CHECK(std::abs(z) < 1.0);
  CHECK(abs_err(z, 0.98328664855046766) < 1e-14);
  CHECK(abs_err(hauptmodul_equianharmonic_offset(T(0.5, 1.0)) + 1.0, z) < 1e-16);
}

TEST_CASE("hyperelliptic Hauptmodul and its square root") {
  CHECK(abs_err(hauptmodul_hyperelliptic(T(0, 1)), std::pow(2.0, -0.25)) < 1e-15);
  CHECK(std::abs(hauptmodul_hyperelliptic(T(0, 30))) < 1e-9);
  const Complex h = hauptmodul_hyperelliptic(T(0, 1.5));
  CHECK(std::abs(h.imag()) < 1e-16);
  CHECK(h.real() > 0.0);
  CHECK(h.real() < 1.0);
  CHECK(abs_err(h, 0.6049094681389514) < 1e-15);
  CHECK(abs_err(sqrt_theta_ratio(T(0, 1)), std::pow(2.0, -0.125)) < 1e-15);
  for (const Complex tau : kGrid) {
    CAPTURE(tau);
    const TauPoint t(tau);
    const Complex s = sqrt_theta_ratio(t);
    CHECK(rel_err(s * s, hauptmodul_hyperelliptic(t)) < 1e-12);
    const Complex hh = hauptmodul_hyperelliptic(t);
    CHECK(rel_err(hauptmodul_lemniscatic(t), hh * hh) < 1e-13);
  }
  const Complex tau{0.2, 9.0};
  const Complex lead = std::sqrt(2.0) * std::exp(kI * kPi * tau / 8.0);
  CHECK(rel_err(sqrt_theta_ratio(TauPoint(tau)), lead) < 1e-10);
}
