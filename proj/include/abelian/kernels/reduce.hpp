#pragma once

// Data-parallel reductions used by the quadrature rules, the Cauchy-circle
// differentiator and the Weierstrass power series. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2/FMA variant; the variant is
// picked once at first use from CPUID. Set ABELIAN_KERNELS=scalar in the
// environment to force the reference path.

#include <cstddef>
#include <span>
#include <string_view>

#include "abelian/complex.hpp"

namespace abelian::kernels {

enum class Isa { scalar, avx2 };

/// sum_i w[i] * v[i] (real weights, complex values). Sizes must match.
using WeightedSumFn = Complex (*)(const double* w, const Complex* v, std::size_t n);
/// sum_i a[i] * b[i] (no conjugation). Sizes must match.
using DotFn = Complex (*)(const Complex* a, const Complex* b, std::size_t n);

struct KernelTable {
  Isa isa;
  WeightedSumFn weighted_sum;
  DotFn dot;
};

/// The table for `isa`, or nullptr when that variant was not compiled in or
/// the running CPU lacks the instructions.
const KernelTable* kernel_table(Isa isa) noexcept;

/// The table selected for this process (immutable after first call).
const KernelTable& active() noexcept;

std::string_view isa_name(Isa isa) noexcept;

inline Complex weighted_sum(std::span<const double> w, std::span<const Complex> v) {
  return active().weighted_sum(w.data(), v.data(), w.size() < v.size() ? w.size() : v.size());
}

inline Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

namespace scalar {
Complex weighted_sum(const double* w, const Complex* v, std::size_t n);
Complex dot(const Complex* a, const Complex* b, std::size_t n);
}  // namespace scalar

}  // namespace abelian::kernels
