#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "tom/simd/kernels.hpp"

namespace tom::simd {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::count_subsets, &scalar::popcount};
#if TOM_SIMD_X86
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::count_subsets, &avx2::popcount};
#endif

const KernelTable& select() {
  if (const char* forced = std::getenv("TOM_SIMD"); forced && std::string(forced) == "scalar")
    return kScalar;
#if TOM_SIMD_X86
  if (is_supported(Isa::Avx2)) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if TOM_SIMD_X86 && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!is_supported(isa))
    throw std::invalid_argument("kernel set '" + std::string(isa_name(isa)) +
                                "' is not supported on this CPU");
#if TOM_SIMD_X86
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace tom::simd
