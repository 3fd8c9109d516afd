#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace abelian::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::weighted_sum, &scalar::dot};

#if defined(ABELIAN_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::weighted_sum, &avx2::dot};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("ABELIAN_KERNELS")) {
    if (std::string_view(forced) == "scalar") return kScalar;
  }
#if defined(ABELIAN_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

const KernelTable* kernel_table(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(ABELIAN_HAVE_AVX2_KERNELS)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace abelian::kernels
