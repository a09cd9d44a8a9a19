#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-parallel bitset kernels. Every kernel has a portable scalar
// reference and, where the CPU allows it, a vectorized variant selected
// once at startup. All variants return identical results.

namespace tom::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  // Number of sets s among `n_sets` packed sets of `words` words each with
  // s ⊆ target (s & ~target == 0 in every word).
  std::size_t (*count_subsets)(const std::uint64_t* sets, std::size_t n_sets,
                               std::size_t words, const std::uint64_t* target);
  // Total number of set bits in `n` words.
  std::size_t (*popcount)(const std::uint64_t* words, std::size_t n);
};

bool is_supported(Isa isa);

// The kernels for `isa`; throws std::invalid_argument if unsupported.
const KernelTable& kernels_for(Isa isa);

// Best supported kernels, unless TOM_SIMD=scalar is set in the environment.
const KernelTable& kernels();

}  // namespace tom::simd
