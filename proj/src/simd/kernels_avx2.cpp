// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include "kernels_impl.hpp"

#if TOM_SIMD_X86

#include <immintrin.h>

namespace tom::simd::avx2 {
namespace {

// Per-byte popcount via two nibble lookups, summed into 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t count_single_word(const std::uint64_t* sets, std::size_t n_sets,
                              std::uint64_t target) {
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t s = 0;
  for (; s + 8 <= n_sets; s += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + s));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + s + 4));
    const __m256i za = _mm256_cmpeq_epi64(_mm256_andnot_si256(t, a), zero);
    const __m256i zb = _mm256_cmpeq_epi64(_mm256_andnot_si256(t, b), zero);
    count += static_cast<std::size_t>(_mm_popcnt_u32(
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(za))) |
        (static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(zb))) << 4)));
  }
  for (; s + 4 <= n_sets; s += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + s));
    const __m256i za = _mm256_cmpeq_epi64(_mm256_andnot_si256(t, a), zero);
    count += static_cast<std::size_t>(
        _mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(za)))));
  }
  for (; s < n_sets; ++s) count += (sets[s] & ~target) == 0;
  return count;
}

}  // namespace

std::size_t count_subsets(const std::uint64_t* sets, std::size_t n_sets, std::size_t words,
                          const std::uint64_t* target) {
  if (words == 1) return count_single_word(sets, n_sets, target[0]);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n_sets; ++s) {
    const std::uint64_t* set = sets + s * words;
    std::size_t w = 0;
    __m256i outside = _mm256_setzero_si256();
    for (; w + 4 <= words; w += 4) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(set + w));
      const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + w));
      outside = _mm256_or_si256(outside, _mm256_andnot_si256(t, a));
    }
    std::uint64_t tail = 0;
    for (; w < words; ++w) tail |= set[w] & ~target[w];
    count += _mm256_testz_si256(outside, outside) && tail == 0;
  }
  return count;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(v));
  }
  std::size_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(words[i]));
  return total;
}

}  // namespace tom::simd::avx2

#endif
