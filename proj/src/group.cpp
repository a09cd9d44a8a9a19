#include "tom/group.hpp"

#include <string>
#include <unordered_map>

#include "tom/errors.hpp"

namespace tom {
namespace {

bool is_latin_square(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t mark = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++mark;
    for (std::size_t b = 0; b < n; ++b) {
      Element x = t[a * n + b];
      if (x >= n || stamp[x] == mark) return false;
      stamp[x] = mark;
    }
    ++mark;
    for (std::size_t b = 0; b < n; ++b) {
      Element x = t[b * n + a];
      if (stamp[x] == mark) return false;
      stamp[x] = mark;
    }
  }
  return true;
}

bool is_associative(std::size_t n, const std::vector<Element>& t) {
  auto mul = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }
  // Deterministic sample of triples for large tables.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto draw = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<std::size_t>(state % n);
  };
  for (int k = 0; k < 200000; ++k) {
    std::size_t a = draw(), b = draw(), c = draw();
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley(std::size_t order, std::vector<Element> table,
                                     std::optional<GroupLabel> label) {
  if (order == 0) throw InputError("group order must be positive");
  if (table.size() != order * order)
    throw InputError("Cayley table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(order * order));
  for (std::size_t a = 0; a < order; ++a)
    if (table[a] != a || table[a * order] != a)
      throw InputError("element 0 is not the identity");
  if (!is_latin_square(order, table)) throw InputError("Cayley table is not a Latin square");
  if (!is_associative(order, table)) throw InputError("Cayley table is not associative");

  FiniteGroup g;
  g.order_ = order;
  g.cayley_ = std::move(table);
  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g.cayley_[a * order + b] == 0) {
        g.inverse_[a] = static_cast<Element>(b);
        break;
      }
  g.label_ = label;
  return g;
}

FiniteGroup build_group(std::span<const Permutation> gens, std::optional<GroupLabel> label,
                        std::size_t bound) {
  const auto elements = close_generators(gens, bound);
  const std::size_t n = elements.size();
  std::unordered_map<Permutation, Element, PermutationHash> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Element>(i));

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(compose(elements[a], elements[b]));
  return FiniteGroup::from_cayley(n, std::move(table), label);
}

bool satisfies_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = g.cayley_row(static_cast<Element>(a));
    table.insert(table.end(), row.begin(), row.end());
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(0, static_cast<Element>(a)) != a || g.mul(static_cast<Element>(a), 0) != a)
      return false;
    if (g.mul(static_cast<Element>(a), g.inv(static_cast<Element>(a))) != 0) return false;
  }
  return is_latin_square(n, table) && is_associative(n, table);
}

}  // namespace tom
