#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tom/element_set.hpp"
#include "tom/group.hpp"

namespace tom {

struct Subgroup {
  ElementSet members;
  std::size_t order = 0;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
};

struct SubgroupClass {
  Subgroup representative;  // lexicographically least member-set in the class
  std::size_t class_size = 0;
  std::size_t subgroup_order = 0;
  std::size_t normalizer_order = 0;
  // Every subgroup in the class, lexicographically sorted; conjugates[0] is
  // the representative.
  std::vector<ElementSet> conjugates;
};

inline constexpr std::size_t kDefaultSubgroupBound = 100000;

// Whether `s` is a subgroup of `g` (contains the identity, closed under
// multiplication; closure under inverses follows for finite sets).
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

// ⟨gens⟩ inside g.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);

// All subgroups, duplicate-free and sorted lexicographically by member-set.
// Seeds with the cyclic subgroups and joins ⟨H, x⟩ until nothing new
// appears. Throws ResourceError past `bound` subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    std::size_t bound = kDefaultSubgroupBound);

// {x·h·x⁻¹ : h ∈ h_members}
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& h, Element x);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element x);

std::size_t normalizer_order(const FiniteGroup& g, const Subgroup& h);

// Conjugacy classes of subgroups ordered by subgroup order, ties broken by
// the lexicographic order of the representatives.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(
    const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound);

}  // namespace tom
