#pragma once

#include <cstddef>
#include <cstdint>

namespace tom::simd {

namespace scalar {
std::size_t count_subsets(const std::uint64_t* sets, std::size_t n_sets, std::size_t words,
                          const std::uint64_t* target);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TOM_SIMD_X86 1
namespace avx2 {
std::size_t count_subsets(const std::uint64_t* sets, std::size_t n_sets, std::size_t words,
                          const std::uint64_t* target);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
}  // namespace avx2
#else
#define TOM_SIMD_X86 0
#endif

}  // namespace tom::simd
