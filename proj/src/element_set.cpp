#include "tom/element_set.hpp"

namespace tom {

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  // Let x be the least element of the symmetric difference. The sequences
  // agree below x. If x ∈ a, then a continues with x while b continues with
  // something larger (a < b) or stops (b is a prefix, b < a); symmetric if
  // x ∈ b.
  const auto wa = a.words(), wb = b.words();
  const std::size_t n = std::min(wa.size(), wb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const bool in_a = (wa[i] >> bit) & 1u;
    const auto& other = in_a ? wb : wa;
    // Does `other` have any member above position (i, bit)?
    bool other_continues = bit < 63 && (other[i] >> (bit + 1)) != 0;
    for (std::size_t k = i + 1; !other_continues && k < other.size(); ++k)
      other_continues = other[k] != 0;
    return in_a ? other_continues : !other_continues;
  }
  return false;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 0x243f6a8885a308d3ull ^ s.universe();
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace tom
