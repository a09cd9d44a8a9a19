#include <bit>

#include "kernels_impl.hpp"

namespace tom::simd::scalar {

std::size_t count_subsets(const std::uint64_t* sets, std::size_t n_sets, std::size_t words,
                          const std::uint64_t* target) {
  std::size_t count = 0;
  for (std::size_t s = 0; s < n_sets; ++s) {
    const std::uint64_t* set = sets + s * words;
    std::uint64_t outside = 0;
    for (std::size_t w = 0; w < words; ++w) outside |= set[w] & ~target[w];
    count += outside == 0;
  }
  return count;
}

std::size_t popcount(const std::uint64_t* words, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

}  // namespace tom::simd::scalar
