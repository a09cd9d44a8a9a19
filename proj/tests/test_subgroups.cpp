#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tom/errors.hpp"
#include "tom/subgroups.hpp"

namespace {

using tom::Permutation;

struct S3 {
  std::vector<Permutation> gens{Permutation({1, 0, 2}), Permutation({1, 2, 0})};
  std::vector<Permutation> elements = tom::close_generators(gens);
  tom::FiniteGroup g = tom::build_group(gens);

  tom::Element index_of(const Permutation& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == p) return static_cast<tom::Element>(i);
    throw std::runtime_error("not an element");
  }
};

std::set<std::vector<tom::Element>> as_lists(const std::vector<tom::Subgroup>& subs) {
  std::set<std::vector<tom::Element>> out;
  for (const auto& s : subs) out.insert(s.members.elements());
  return out;
}

}  // namespace

TEST_CASE("all_subgroups on small groups") {
  CHECK(tom::all_subgroups(oracle::group(2, 1)).size() == 2);
  CHECK(tom::all_subgroups(oracle::group(6, 1)).size() == 6);  // S3
  CHECK(tom::all_subgroups(oracle::group(4, 2)).size() == 5);  // Klein four
  CHECK(tom::all_subgroups(oracle::group(8, 4)).size() == 6);  // Q8
}

TEST_CASE("all_subgroups matches the subset oracle up to order 12") {
  for (std::size_t order = 1; order <= 12; ++order) {
    for (const auto& r : oracle::catalog(order)) {
      CAPTURE(order);
      CAPTURE(r.catalog_id);
      const auto g = tom::build_group(r);
      const auto subs = tom::all_subgroups(g);
      CHECK(as_lists(subs) == oracle::subgroups_by_subsets(g));
      CHECK(as_lists(subs).size() == subs.size());
    }
  }
}

TEST_CASE("all_subgroups output contract") {
  const auto g = oracle::group(16, 7);
  const auto subs = tom::all_subgroups(g);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CHECK(tom::is_subgroup(g, subs[i].members));
    CHECK(subs[i].order == subs[i].members.count());
    CHECK(g.order() % subs[i].order == 0);
    if (i > 0) CHECK(tom::lex_less(subs[i - 1].members, subs[i].members));
  }
  CHECK_THROWS_AS(tom::all_subgroups(g, 3), tom::ResourceError);
}

TEST_CASE("lex_less orders increasing member sequences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t universe = 1 + rng() % 150;
    tom::ElementSet a(universe), b(universe);
    const double density = (rng() % 100) / 100.0;
    for (tom::Element e = 0; e < universe; ++e) {
      if ((rng() % 1000) / 1000.0 < density) a.insert(e);
      if ((rng() % 1000) / 1000.0 < density) b.insert(e);
    }
    if (trial % 5 == 0) b = a;
    CHECK(tom::lex_less(a, b) == (a.elements() < b.elements()));
  }
}

TEST_CASE("conjugate_subgroup") {
  const S3 s3;
  const auto transposition = tom::generated_subgroup(s3.g, {s3.index_of(Permutation({1, 0, 2}))});
  CHECK(tom::conjugate_subgroup(s3.g, transposition, 0) == transposition);
  const auto moved =
      tom::conjugate_subgroup(s3.g, transposition, s3.index_of(Permutation({1, 2, 0})));
  CHECK(moved.order == 2);
  CHECK(tom::is_subgroup(s3.g, moved.members));
  CHECK_FALSE(moved == transposition);
  // (0 1 2)(0 1)(0 1 2)⁻¹ = (1 2)
  CHECK(moved.members.contains(s3.index_of(Permutation({0, 2, 1}))));

  const auto abelian = oracle::group(8, 2);
  for (const auto& h : tom::all_subgroups(abelian))
    for (tom::Element x = 0; x < abelian.order(); ++x)
      CHECK(tom::conjugate_subgroup(abelian, h, x) == h);
}

TEST_CASE("normalizer_order") {
  const S3 s3;
  const auto transposition = tom::generated_subgroup(s3.g, {s3.index_of(Permutation({1, 0, 2}))});
  CHECK(tom::normalizer_order(s3.g, transposition) == 2);
  const auto whole = tom::generated_subgroup(s3.g, {1, 2});
  CHECK(whole.order == 6);
  CHECK(tom::normalizer_order(s3.g, whole) == 6);
  const auto abelian = oracle::group(16, 5);
  for (const auto& h : tom::all_subgroups(abelian)) CHECK(tom::normalizer_order(abelian, h) == 16);
}

TEST_CASE("conjugacy classes of S3") {
  const auto classes = tom::conjugacy_classes_of_subgroups(oracle::group(6, 1));
  REQUIRE(classes.size() == 4);
  std::vector<std::size_t> sizes, orders;
  for (const auto& c : classes) {
    sizes.push_back(c.class_size);
    orders.push_back(c.subgroup_order);
  }
  CHECK(sizes == std::vector<std::size_t>{1, 3, 1, 1});
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
}

TEST_CASE("abelian groups have singleton classes") {
  const auto g = oracle::group(16, 2);
  const auto classes = tom::conjugacy_classes_of_subgroups(g);
  CHECK(classes.size() == tom::all_subgroups(g).size());
  for (const auto& c : classes) CHECK(c.class_size == 1);
}

TEST_CASE("class invariants on every group of order 16 and 32") {
  for (std::size_t order : {16, 32}) {
    for (const auto& r : oracle::catalog(order)) {
      const auto g = tom::build_group(r);
      const auto subs = tom::all_subgroups(g);
      const auto classes = tom::conjugacy_classes_of_subgroups(g);
      std::size_t total = 0;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& c = classes[k];
        total += c.class_size;
        CHECK(c.class_size * c.normalizer_order == g.order());
        CHECK(c.representative.order == c.subgroup_order);
        CHECK(c.conjugates.front() == c.representative.members);
        CHECK(tom::normalizer_order(g, c.representative) == c.normalizer_order);
        for (const auto& member : c.conjugates) {
          CHECK_FALSE(tom::lex_less(member, c.representative.members));
          const tom::Subgroup s{member, member.count()};
          CHECK(s.order == c.subgroup_order);
          CHECK(tom::normalizer_order(g, s) == c.normalizer_order);
        }
        if (k > 0) {
          const auto& prev = classes[k - 1];
          CHECK(prev.subgroup_order <= c.subgroup_order);
          if (prev.subgroup_order == c.subgroup_order)
            CHECK(tom::lex_less(prev.representative.members, c.representative.members));
        }
      }
      CHECK(total == subs.size());
    }
  }
}

TEST_CASE("elementary abelian group of order 64 has the Gaussian-binomial subgroup count") {
  const std::uint64_t expected = oracle::subspace_count(6);
  CHECK(expected == 2825);
  std::size_t found = 0;
  for (const auto& r : oracle::catalog(64)) {
    const auto g = tom::build_group(r);
    bool exponent_two = true;
    for (tom::Element x = 0; x < g.order() && exponent_two; ++x)
      exponent_two = g.mul(x, x) == g.identity();
    if (!exponent_two) continue;
    ++found;
    CHECK(r.catalog_id == 267);
    CHECK(tom::all_subgroups(g).size() == expected);
  }
  CHECK(found == 1);
}
