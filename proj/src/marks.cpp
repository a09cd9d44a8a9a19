#include "tom/marks.hpp"

#include <string>
#include <unordered_set>

#include "tom/errors.hpp"
#include "tom/parallel.hpp"
#include "tom/simd/kernels.hpp"

namespace tom {
namespace {

void require_subgroups(const FiniteGroup& g, const ElementSet& u, const ElementSet& v) {
  if (!is_subgroup(g, u)) throw InputError("acting set is not a subgroup");
  if (!is_subgroup(g, v)) throw InputError("coset set is not a subgroup");
}

}  // namespace

Mark fixed_points_by_cosets(const FiniteGroup& g, const ElementSet& u, const ElementSet& v) {
  require_subgroups(g, u, v);
  const auto u_elements = u.elements();
  const auto v_elements = v.elements();
  ElementSet covered(g.order());
  Mark fixed = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    for (Element y : v_elements) covered.insert(g.mul(x, y));
    // u·xV = xV  ⇔  x⁻¹ux ∈ V
    const Element x_inv = g.inv(x);
    bool all = true;
    for (Element e : u_elements) {
      if (!v.contains(g.conj(x_inv, e))) {
        all = false;
        break;
      }
    }
    fixed += all;
  }
  return fixed;
}

Mark fixed_points_by_conjugates(const FiniteGroup& g, const ElementSet& u, const ElementSet& v) {
  require_subgroups(g, u, v);
  std::unordered_set<ElementSet, ElementSetHash> conjugates;
  std::size_t normalizer = 0;
  for (Element x = 0; x < g.order(); ++x) {
    ElementSet c = conjugate_set(g, u, x);
    normalizer += c == u;
    conjugates.insert(std::move(c));
  }
  std::size_t inside = 0;
  for (const auto& c : conjugates) inside += c.is_subset_of(v);
  return static_cast<Mark>(inside * normalizer / v.count());
}

MarksMatrix table_of_marks(const FiniteGroup& g, const std::vector<SubgroupClass>& classes,
                           unsigned threads) {
  const std::size_t n = classes.size();
  const std::size_t words = ElementSet::words_for(g.order());

  // Packed conjugate lists, one contiguous block per class.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + classes[i].conjugates.size();
  std::vector<std::uint64_t> packed(offset[n] * words);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < classes[i].conjugates.size(); ++k) {
      const auto w = classes[i].conjugates[k].words();
      std::copy(w.begin(), w.end(), packed.begin() + (offset[i] + k) * words);
    }

  MarksMatrix m;
  m.entries = SquareMatrix(n);
  m.group_order = g.order();
  m.class_orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.class_orders[i] = classes[i].subgroup_order;
  if (g.label()) m.catalog_id = g.label()->catalog_id;

  const auto& kernels = simd::kernels();
  parallel_for(n, threads, [&](std::size_t i) {
    const std::size_t u_order = classes[i].subgroup_order;
    const std::size_t normalizer = classes[i].normalizer_order;
    const std::uint64_t* conj = packed.data() + offset[i] * words;
    const std::size_t n_conj = classes[i].conjugates.size();
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t v_order = classes[j].subgroup_order;
      if (v_order % u_order != 0) continue;
      const std::size_t inside = kernels.count_subsets(
          conj, n_conj, words, classes[j].representative.members.words().data());
      m.entries(i, j) = static_cast<Mark>(inside * normalizer / v_order);
    }
  });
  return m;
}

MarksMatrix table_of_marks(const FiniteGroup& g, unsigned threads) {
  return table_of_marks(g, conjugacy_classes_of_subgroups(g), threads);
}

bool satisfies_marks_invariants(const MarksMatrix& m) {
  const std::size_t n = m.size();
  if (m.class_orders.size() != n || n == 0) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (m.class_orders[i] < m.class_orders[i - 1]) return false;
  if (m.class_orders.front() != 1 || m.class_orders.back() != m.group_order) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.entries(i, i) < 1) return false;
    if (m.entries(i, n - 1) != 1) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.entries(i, j) < 0) return false;
      if (m.class_orders[i] > m.class_orders[j] && m.entries(i, j) != 0) return false;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (m.entries(0, j) != static_cast<Mark>(m.group_order / m.class_orders[j])) return false;
  return true;
}

}  // namespace tom
