#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check: subgroups by testing every subset, fixed
// points by building the coset space literally, matrix isomorphism by trying
// every permutation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tom/catalog.hpp"
#include "tom/group.hpp"
#include "tom/matrix.hpp"

namespace oracle {

inline std::vector<tom::GroupRecord> catalog(std::size_t order) {
  return tom::load_catalog(TOM_DATA_DIR, order);
}

inline tom::FiniteGroup group(std::size_t order, std::size_t id) {
  for (const auto& r : catalog(order))
    if (r.catalog_id == id) return tom::build_group(r);
  throw std::runtime_error("missing catalog group");
}

// Every subset containing the identity and closed under multiplication,
// each as a sorted element list. Feasible up to order ~16.
inline std::set<std::vector<tom::Element>> subgroups_by_subsets(const tom::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<tom::Element>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b)
        if (((mask >> b) & 1) &&
            !((mask >> g.mul(static_cast<tom::Element>(a), static_cast<tom::Element>(b))) & 1))
          closed = false;
    }
    if (!closed) continue;
    std::vector<tom::Element> s;
    for (std::size_t a = 0; a < n; ++a)
      if ((mask >> a) & 1) s.push_back(static_cast<tom::Element>(a));
    out.insert(s);
  }
  return out;
}

// |Fix_U(G/V)| straight from the definition: materialize every left coset
// xV as a set and count those mapped onto themselves by every u ∈ U.
inline long fixed_points_by_definition(const tom::FiniteGroup& g,
                                       const std::vector<tom::Element>& u,
                                       const std::vector<tom::Element>& v) {
  std::set<std::set<tom::Element>> cosets;
  for (tom::Element x = 0; x < g.order(); ++x) {
    std::set<tom::Element> c;
    for (auto y : v) c.insert(g.mul(x, y));
    cosets.insert(c);
  }
  long fixed = 0;
  for (const auto& c : cosets) {
    bool all = true;
    for (auto h : u) {
      std::set<tom::Element> moved;
      for (auto x : c) moved.insert(g.mul(h, x));
      if (moved != c) {
        all = false;
        break;
      }
    }
    fixed += all;
  }
  return fixed;
}

inline bool isomorphic_by_brute_force(const tom::SquareMatrix& a, const tom::SquareMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a(i, j) == b(pi[i], pi[j]);
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

// Σ_k [dim choose k]_q, the number of subspaces of F_q^dim.
inline std::uint64_t subspace_count(unsigned dim, std::uint64_t q = 2) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= dim; ++k) {
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
      std::uint64_t qn = 1, qi = 1;
      for (unsigned e = 0; e < dim - i; ++e) qn *= q;
      for (unsigned e = 0; e < i + 1; ++e) qi *= q;
      num *= qn - 1;
      den *= qi - 1;
    }
    total += num / den;
  }
  return total;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline tom::SquareMatrix random_matrix(std::size_t n, tom::Mark max_value, std::mt19937_64& rng) {
  std::uniform_int_distribution<tom::Mark> dist(0, max_value);
  tom::SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace oracle
