#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "abelian/complex.hpp"

namespace testing {

using abelian::Complex;

inline double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double abs_err(Complex got, Complex want) { return std::abs(got - want); }

/// Uniform points in the annulus r0 <= |z| <= r1, fixed seed.
inline std::vector<Complex> annulus_points(std::size_t n, double r0, double r1, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> r(r0, r1);
  std::uniform_real_distribution<double> t(-abelian::kPi, abelian::kPi);
  std::vector<Complex> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(std::polar(r(rng), t(rng)));
  return out;
}

}  // namespace testing
