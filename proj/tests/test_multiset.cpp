#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tom/marks.hpp"
#include "tom/multiset.hpp"

using tom::EntryMultiset;
using tom::LineMultiset;

namespace {

EntryMultiset ms(std::vector<tom::Mark> v) { return tom::ms_from_sequence(v); }

const tom::SquareMatrix kA{{1, 2}, {1, 2}};
const tom::SquareMatrix kB{{2, 1}, {1, 2}};

}  // namespace

TEST_CASE("ms_from_sequence") {
  const auto m = ms({1, 2, 1, 2});
  using P = EntryMultiset::Pair;
  CHECK(m.pairs() == std::vector<P>{{1, 2}, {2, 2}});
  CHECK(ms({}).empty());
  CHECK(ms({5}).pairs() == std::vector<P>{{5, 1}});
  CHECK(m.total() == 4);
  CHECK(m.multiplicity(2) == 2);
  CHECK(m.multiplicity(3) == 0);
}

TEST_CASE("entries of the worked example") {
  CHECK(tom::entries_invariant(kA) == ms({1, 1, 2, 2}));
  CHECK(tom::entries_invariant(kA) == tom::entries_invariant(kB));
  CHECK(tom::entries_invariant(tom::SquareMatrix(2)) == ms({0, 0, 0, 0}));
  // ToM(S3) counted from the oracle table: seven 0s, five 1s, two 2s, one 3, one 6.
  const auto s3 = tom::table_of_marks(oracle::group(6, 1));
  CHECK(tom::entries_invariant(s3.entries) == ms({0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 3, 6}));
}

TEST_CASE("rows and columns of the worked example") {
  CHECK(tom::rows_invariant(kA) == tom::rows_invariant(kB));
  CHECK(tom::rows_invariant(kA) == LineMultiset::from_values({ms({1, 2}), ms({1, 2})}));
  CHECK(tom::columns_invariant(kA) == LineMultiset::from_values({ms({1, 1}), ms({2, 2})}));
  CHECK(tom::columns_invariant(kA) != tom::columns_invariant(kB));
  CHECK(tom::columns_invariant(kB) == LineMultiset::from_values({ms({1, 2}), ms({1, 2})}));

  const tom::SquareMatrix identity{{1, 0}, {0, 1}};
  CHECK(tom::rows_invariant(identity).pairs() ==
        std::vector<LineMultiset::Pair>{{ms({0, 1}), 2}});
  const tom::SquareMatrix symmetric{{1, 4, 0}, {4, 2, 7}, {0, 7, 3}};
  CHECK(tom::rows_invariant(symmetric) == tom::columns_invariant(symmetric));
}

TEST_CASE("nested multisets are totally ordered and canonical") {
  const auto a = ms({1, 2}), b = ms({1, 1}), c = ms({0, 5, 5});
  CHECK(c < b);
  CHECK(a < b);
  const auto x = LineMultiset::from_values({a, b, a, c});
  const auto y = LineMultiset::from_values({c, a, b, a});
  CHECK(x == y);
  CHECK(x.pairs().size() == 3);
  CHECK(x.multiplicity(a) == 2);
}

TEST_CASE("invariants are unchanged by independent row and column permutations") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = oracle::random_matrix(n, 1 + rng() % 6, rng);
    const auto pi = oracle::random_permutation(n, rng);
    const auto sigma = oracle::random_permutation(n, rng);
    const auto b = tom::permute(a, pi, sigma);
    CHECK(tom::rows_invariant(a) == tom::rows_invariant(b));
    CHECK(tom::columns_invariant(a) == tom::columns_invariant(b));
    CHECK(tom::entries_invariant(a) == tom::entries_invariant(b));
  }
}

TEST_CASE("ms_from_sequence ignores order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<tom::Mark> v(rng() % 30);
    for (auto& x : v) x = static_cast<tom::Mark>(rng() % 7) - 3;
    auto w = v;
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(ms(v) == ms(w));
    CHECK(ms(v).total() == v.size());
  }
}

TEST_CASE("flattening the line invariants gives the entries") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_matrix(1 + rng() % 10, 4, rng);
    CHECK(tom::flatten(tom::rows_invariant(a)) == tom::entries_invariant(a));
    CHECK(tom::flatten(tom::columns_invariant(a)) == tom::entries_invariant(a));
  }
}
