#include "tom/subgroups.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tom/errors.hpp"

namespace tom {
namespace {

// ⟨H, gens⟩ where H = h_set is already a subgroup and `gens` together with
// H generate the result. The result is built as a union of right cosets Hy:
// it is closed under right multiplication by every generator once y·s lies
// in it for every coset representative y.
ElementSet join(const FiniteGroup& g, const ElementSet& h_set, const std::vector<Element>& gens) {
  const std::vector<Element> h = h_set.elements();
  ElementSet out = h_set;
  std::vector<Element> reps{g.identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Element s : gens) {
      const Element y = g.mul(reps[r], s);
      if (out.contains(y)) continue;
      for (Element x : h) out.insert(g.mul(x, y));
      reps.push_back(y);
    }
  }
  return out;
}

ElementSet trivial_set(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(g.identity());
  return s;
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(g.identity())) return false;
  const auto members = s.elements();
  for (Element a : members)
    for (Element b : members)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element x : gens)
    if (x >= g.order()) throw InputError("element index out of range");
  ElementSet members = join(g, trivial_set(g), gens);
  const std::size_t order = members.count();
  return {std::move(members), order};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Node> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  auto add = [&](ElementSet members, std::vector<Element> gens) {
    if (index.contains(members)) return;
    if (found.size() >= bound)
      throw ResourceError("subgroup count exceeds " + std::to_string(bound));
    index.emplace(members, found.size());
    found.push_back({std::move(members), std::move(gens)});
  };

  for (Element x = 0; x < n; ++x) {
    std::vector<Element> gens;
    if (x != g.identity()) gens.push_back(x);
    ElementSet cyclic = join(g, trivial_set(g), gens);
    add(std::move(cyclic), std::move(gens));
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet h = found[i].members;
    const auto h_elements = h.elements();
    const auto h_gens = found[i].gens;
    // ⟨H, x⟩ only depends on the right coset Hx.
    ElementSet seen = h;
    for (Element x = 0; x < n; ++x) {
      if (seen.contains(x)) continue;
      for (Element y : h_elements) seen.insert(g.mul(y, x));
      std::vector<Element> gens = h_gens;
      gens.push_back(x);
      ElementSet joined = join(g, h, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) {
    const std::size_t order = node.members.count();
    out.push_back({std::move(node.members), order});
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return lex_less(a.members, b.members); });
  return out;
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& h, Element x) {
  ElementSet out(g.order());
  h.for_each([&](Element e) { out.insert(g.conj(x, e)); });
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element x) {
  if (x >= g.order()) throw InputError("element index out of range");
  return {conjugate_set(g, h.members, x), h.order};
}

std::size_t normalizer_order(const FiniteGroup& g, const Subgroup& h) {
  std::size_t count = 0;
  for (Element x = 0; x < g.order(); ++x) count += conjugate_set(g, h.members, x) == h.members;
  return count;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                          std::size_t bound) {
  const auto subgroups = all_subgroups(g, bound);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  index.reserve(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i].members, i);

  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<SubgroupClass> classes;
  // Subgroups are visited in lexicographic order, so the first unassigned
  // one is the least member of its class.
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    SubgroupClass c;
    c.representative = subgroups[i];
    c.subgroup_order = subgroups[i].order;
    std::vector<std::size_t> members;
    for (Element x = 0; x < g.order(); ++x) {
      const std::size_t j = index.at(conjugate_set(g, subgroups[i].members, x));
      if (assigned[j]) continue;
      assigned[j] = true;
      members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    for (std::size_t j : members) c.conjugates.push_back(subgroups[j].members);
    c.class_size = members.size();
    c.normalizer_order = g.order() / c.class_size;
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.subgroup_order < b.subgroup_order;
  });
  return classes;
}

}  // namespace tom
