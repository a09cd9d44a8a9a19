#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "tom/simd/kernels.hpp"

namespace {

using tom::simd::Isa;

std::size_t naive_count(const std::vector<std::uint64_t>& sets, std::size_t words,
                        const std::vector<std::uint64_t>& target) {
  std::size_t count = 0;
  for (std::size_t s = 0; s * words < sets.size(); ++s) {
    bool inside = true;
    for (std::size_t w = 0; w < words; ++w)
      if (sets[s * words + w] & ~target[w]) inside = false;
    count += inside;
  }
  return count;
}

}  // namespace

TEST_CASE("scalar and vector kernels agree") {
  const auto& scalar = tom::simd::kernels_for(Isa::Scalar);
  std::vector<const tom::simd::KernelTable*> variants{&scalar};
  if (tom::simd::is_supported(Isa::Avx2))
    variants.push_back(&tom::simd::kernels_for(Isa::Avx2));
  else
    MESSAGE("AVX2 not supported here; only the scalar kernels are exercised");
  variants.push_back(&tom::simd::kernels());

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t words = 1 + rng() % 9;
    const std::size_t n_sets = rng() % 40;
    std::vector<std::uint64_t> target(words), sets(words * n_sets);
    for (auto& w : target) w = rng() | rng();
    for (std::size_t s = 0; s < n_sets; ++s)
      for (std::size_t w = 0; w < words; ++w) {
        // Mix sets that are inside the target with ones that are not.
        const std::uint64_t r = rng();
        sets[s * words + w] = (s % 3 == 0) ? (target[w] & r) : r & (rng() | target[w]);
      }
    const std::size_t expected = naive_count(sets, words, target);
    for (const auto* k : variants) {
      CAPTURE(tom::simd::isa_name(k->isa));
      CHECK(k->count_subsets(sets.data(), n_sets, words, target.data()) == expected);
      std::size_t bits = 0;
      for (auto w : sets) bits += static_cast<std::size_t>(__builtin_popcountll(w));
      CHECK(k->popcount(sets.data(), sets.size()) == bits);
    }
  }
}

TEST_CASE("kernel edge cases") {
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!tom::simd::is_supported(isa)) continue;
    const auto& k = tom::simd::kernels_for(isa);
    const std::uint64_t all = ~std::uint64_t{0};
    std::vector<std::uint64_t> sets(11, all);
    CHECK(k.count_subsets(sets.data(), 0, 1, &all) == 0);
    CHECK(k.count_subsets(sets.data(), 11, 1, &all) == 11);
    const std::uint64_t none = 0;
    CHECK(k.count_subsets(sets.data(), 11, 1, &none) == 0);
    CHECK(k.popcount(sets.data(), 11) == 11 * 64);
    CHECK(k.popcount(sets.data(), 0) == 0);
  }
}

TEST_CASE("unsupported kernels are refused") {
  if (!tom::simd::is_supported(Isa::Avx2))
    CHECK_THROWS_AS(tom::simd::kernels_for(Isa::Avx2), std::invalid_argument);
  CHECK(tom::simd::isa_name(Isa::Scalar) == "scalar");
}
