#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tom/group.hpp"

namespace tom {

// Set of element indices 0..universe-1 stored as 64-bit words.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static std::size_t words_for(std::size_t universe) { return (universe + 63) / 64; }

  std::size_t universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  // Calls f(e) for every member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Element>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> elements() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Lexicographic order of the increasing member sequences, so that
  // {0} < {0,1} < {0,1,2} < {0,2}.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

bool lex_less(const ElementSet& a, const ElementSet& b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

}  // namespace tom
