#pragma once

#include "abelian/kernels/reduce.hpp"

namespace abelian::kernels::avx2 {

#if defined(ABELIAN_HAVE_AVX2_KERNELS)
Complex weighted_sum(const double* w, const Complex* v, std::size_t n);
Complex dot(const Complex* a, const Complex* b, std::size_t n);
#endif

}  // namespace abelian::kernels::avx2
