#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "abelian/kernels/reduce.hpp"
#include "support.hpp"

using namespace abelian;
using testing::rel_err;

namespace {

struct Data {
  std::vector<double> w;
  std::vector<Complex> a;
  std::vector<Complex> b;
};

Data make_data(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Data out;
  for (std::size_t j = 0; j < n; ++j) {
    out.w.push_back(d(rng));
    out.a.emplace_back(d(rng), d(rng));
    out.b.emplace_back(d(rng), d(rng));
  }
  return out;
}

double scale_wsum(const Data& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.w.size(); ++j) s += std::abs(x.w[j]) * std::abs(x.a[j]);
  return s;
}

double scale_dot(const Data& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.a.size(); ++j) s += std::abs(x.a[j]) * std::abs(x.b[j]);
  return s;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  const auto* t = kernels::kernel_table(kernels::Isa::scalar);
  REQUIRE(t != nullptr);
  CHECK(t->isa == kernels::Isa::scalar);
  CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
  CHECK(kernels::isa_name(kernels::Isa::avx2) == "avx2");
}

TEST_CASE("scalar kernels on small known inputs") {
  const double w[] = {1.0, 2.0, -1.0};
  const Complex v[] = {{1.0, 1.0}, {0.5, -1.0}, {2.0, 0.0}};
  CHECK(kernels::scalar::weighted_sum(w, v, 3) == Complex{0.0, -1.0});
  const Complex a[] = {{0.0, 1.0}, {2.0, 0.0}};
  const Complex b[] = {{0.0, 1.0}, {1.0, 3.0}};
  CHECK(kernels::scalar::dot(a, b, 2) == Complex{1.0, 6.0});
  CHECK(kernels::scalar::dot(a, b, 0) == Complex{});
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* simd = kernels::kernel_table(kernels::Isa::avx2);
  if (simd == nullptr) {
    MESSAGE("avx2 variant unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto* ref = kernels::kernel_table(kernels::Isa::scalar);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 31u, 63u, 64u, 65u, 257u, 1000u}) {
    CAPTURE(n);
    const Data x = make_data(n, 1234u + static_cast<unsigned>(n));
    const Complex ws = simd->weighted_sum(x.w.data(), x.a.data(), n);
    const Complex ws_ref = ref->weighted_sum(x.w.data(), x.a.data(), n);
    CHECK(std::abs(ws - ws_ref) <= 1e-14 * (1.0 + scale_wsum(x)));
    const Complex d = simd->dot(x.a.data(), x.b.data(), n);
    const Complex d_ref = ref->dot(x.a.data(), x.b.data(), n);
    CHECK(std::abs(d - d_ref) <= 1e-14 * (1.0 + scale_dot(x)));
  }
}

TEST_CASE("avx2 kernels handle unaligned views") {
  const auto* simd = kernels::kernel_table(kernels::Isa::avx2);
  if (simd == nullptr) return;
  const Data x = make_data(40, 99u);
  for (std::size_t off = 0; off < 4; ++off) {
    const std::size_t n = x.a.size() - off;
    const Complex d = simd->dot(x.a.data() + off, x.b.data() + off, n);
    const Complex d_ref = kernels::scalar::dot(x.a.data() + off, x.b.data() + off, n);
    CHECK(std::abs(d - d_ref) <= 1e-14 * 40.0);
  }
}

TEST_CASE("active table honours the environment override") {
  const auto& t = kernels::active();
  const char* env = std::getenv("ABELIAN_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") {
    CHECK(t.isa == kernels::Isa::scalar);
  } else if (kernels::kernel_table(kernels::Isa::avx2) != nullptr) {
    CHECK(t.isa == kernels::Isa::avx2);
  }
}
