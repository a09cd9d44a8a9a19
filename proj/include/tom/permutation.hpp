#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tom {

using Point = std::uint32_t;

// A bijection on the points 0..degree()-1.
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// (p ∘ q)(x) = p(q(x)). Throws InputError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

inline constexpr std::size_t kDefaultGroupBound = 10000;

// Closure of `gens` under composition, identity first, then breadth-first
// discovery order (x is expanded to x ∘ g for each generator g in list
// order). Throws InputError for an empty list or mixed degrees, and
// ResourceError when the closure grows beyond `bound` elements.
std::vector<Permutation> close_generators(std::span<const Permutation> gens,
                                          std::size_t bound = kDefaultGroupBound);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace tom
