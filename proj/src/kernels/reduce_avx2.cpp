#include "kernels_internal.hpp"

#if defined(ABELIAN_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// std::complex<double> is layout-compatible with double[2], so a 256-bit lane
// holds two interleaved complex numbers [re0, im0, re1, im1].

namespace abelian::kernels::avx2 {

namespace {

__attribute__((target("avx2,fma"))) inline double hsum_pair(__m256d v, int lane) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[lane] + t[lane + 2];
}

}  // namespace

__attribute__((target("avx2,fma"))) Complex weighted_sum(const double* w, const Complex* v,
                                                         std::size_t n) {
  const double* vp = reinterpret_cast<const double*>(v);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // [w0, w0, w1, w1] and [w2, w2, w3, w3]
    const __m256d wq = _mm256_loadu_pd(w + i);
    const __m256d w01 = _mm256_permute4x64_pd(wq, 0x50);
    const __m256d w23 = _mm256_permute4x64_pd(wq, 0xFA);
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(vp + 2 * i), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(vp + 2 * i + 4), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  double re = hsum_pair(acc, 0);
  double im = hsum_pair(acc, 1);
  for (; i < n; ++i) {
    re += w[i] * v[i].real();
    im += w[i] * v[i].imag();
  }
  return {re, im};
}

__attribute__((target("avx2,fma"))) Complex dot(const Complex* a, const Complex* b,
                                                std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  // straight = [ar*br, ai*br, ...], crossed = [ai*bi, ar*bi, ...]
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ap + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bp + 2 * i);
    const __m256d b_re = _mm256_movedup_pd(bv);
    const __m256d b_im = _mm256_permute_pd(bv, 0xF);
    const __m256d a_sw = _mm256_permute_pd(av, 0x5);
    straight = _mm256_fmadd_pd(av, b_re, straight);
    crossed = _mm256_fmadd_pd(a_sw, b_im, crossed);
  }
  double re = hsum_pair(straight, 0) - hsum_pair(crossed, 0);
  double im = hsum_pair(straight, 1) + hsum_pair(crossed, 1);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

}  // namespace abelian::kernels::avx2

#endif
