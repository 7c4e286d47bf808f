#include "doctest.h"

#include <random>
#include <set>

#include "curvemult/errors.hpp"
#include "curvemult/proximity.hpp"
#include "../support/random_germs.hpp"

using namespace curvemult;

namespace {

IntVector ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::set<std::pair<std::size_t, std::size_t>> relations(const ProximityData& pd) {
  std::set<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 1; i <= pd.k(); ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (pd.proximate(i, j)) r.insert({i, j});
  return r;
}

struct Germ {
  CharacteristicSequence cs;
  EuclideanChain chain;
  MultiplicitySequence ms;
  ResolutionIndices idx;
  explicit Germ(const CharacteristicSequence& c)
      : cs(c), chain(euclid_chain(c)), ms(multiplicity_sequence(chain)), idx(resolution_indices(chain)) {}
};

}  // namespace

TEST_CASE("proximity relations of the worked examples") {
  using R = std::set<std::pair<std::size_t, std::size_t>>;
  CHECK(relations(build_proximity({ints({4, 2, 2, 2, 1, 1})})) ==
        R{{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {6, 4}});
  CHECK(relations(build_proximity({ints({2, 1, 1})})) == R{{2, 1}, {3, 2}, {3, 1}});
  CHECK(relations(build_proximity({ints({6, 4, 2, 2, 2, 1, 1})})) ==
        R{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}, {7, 5}});
  CHECK_THROWS_AS(build_proximity({ints({3, 2, 2})}), InvalidInput);
  CHECK_THROWS_AS(build_proximity({ints({5, 2, 2, 2})}), InvalidInput);
}

TEST_CASE("inverse rows of the worked examples") {
  auto pd = build_proximity({ints({4, 2, 2, 2, 1, 1})});
  const auto& X = inverse_rows(pd);
  CHECK(X[2] == ints({2, 1, 1, 0, 0, 0}));
  CHECK(X[5] == ints({4, 2, 2, 2, 1, 1}));
  CHECK(X[4] == ints({2, 1, 1, 1, 1, 0}));
  CHECK(X[1] == ints({1, 1, 0, 0, 0, 0}));
  auto cusp = build_proximity({ints({2, 1, 1})});
  CHECK(cusp.P == IntMatrix{ints({1, 0, 0}), ints({-1, 1, 0}), ints({-1, -1, 1})});
  CHECK(inverse_rows(cusp)[2] == ints({2, 1, 1}));
}

TEST_CASE("divisor vectors and pullbacks") {
  Germ g(CharacteristicSequence::parse("(4;6,9)"));
  auto pd = build_proximity(g.ms);
  auto dv = divisor_vectors(pd, g.ms);
  CHECK(dv.a[2] + 1 == 5);
  CHECK(dv.b[2] == 12);
  CHECK(dv.a[5] + 1 == 13);
  CHECK(dv.b[5] == 30);
  auto y = pullback(ints({1, 1, 0, 0, 0, 0}), pd);
  CHECK(y[2] == 3);
  CHECK(y[5] == 6);
  auto x = pullback(ints({1, 0, 0, 0, 0, 0}), pd);
  CHECK(x[2] == 2);
  CHECK(x[5] == 4);
  CHECK(pullback(IntVector(6, 0), pd) == IntVector(6, 0));
  CHECK_THROWS_AS(pullback(ints({1}), pd), InvalidInput);

  Germ c(CharacteristicSequence::parse("(2;3)"));
  auto cd = divisor_vectors(build_proximity(c.ms), c.ms);
  CHECK(cd.a[2] + 1 == 5);
  CHECK(cd.b[2] == 6);
}

TEST_CASE("random germs: inverse, closed forms, proximity equality, free/satellite ranges") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 150; ++trial) {
    Germ g(testsupport::random_charseq(rng, 4, 40));
    auto pd = build_proximity(g.ms);
    const std::size_t k = pd.k();
    REQUIRE(k == g.ms.size());

    // P * X = I
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < k; ++l) s += pd.P[i][l] * pd.X[l][j];
        CHECK(s == (i == j ? 1 : 0));
      }
    for (std::size_t i = 2; i <= k; ++i) CHECK(pd.proximate(i, i - 1));

    CHECK_NOTHROW(inverse_rows(pd));
    for (std::size_t i = 1; i <= g.cs.genus(); ++i)
      CHECK(pd.row(g.idx.gamma[i]) == closed_gamma_row(g.cs, g.ms, g.idx, i));

    for (std::size_t j = 1; j < k; ++j) {
      Integer s = 0;
      for (auto i : pd.proximate_sets[j - 1]) s += g.ms[i];
      CHECK(s == g.ms[j]);
      const auto& set = pd.proximate_sets[j - 1];
      for (std::size_t t = 0; t < set.size(); ++t) CHECK(set[t] == j + 1 + t);
    }

    for (std::size_t j = 0; j < g.cs.genus(); ++j) {
      for (std::size_t r = g.idx.gamma[j] + 1; r <= g.idx.tau[j]; ++r) CHECK(pd.is_free(r));
      for (std::size_t r = g.idx.tau[j] + 1; r <= g.idx.gamma[j + 1]; ++r) CHECK_FALSE(pd.is_free(r));
    }

    auto dv = divisor_vectors(pd, g.ms);
    for (std::size_t i = 1; i <= g.cs.genus(); ++i) {
      const std::size_t r = g.idx.gamma[i] - 1;
      CHECK((dv.a[r] + 1) * g.cs.d(i) == g.cs.m(i) + g.cs.n());
      Integer E = 0;
      for (std::size_t c = 1; c <= g.idx.gamma[i]; ++c) E += g.ms[c] * g.ms[c];
      CHECK(dv.b[r] * g.cs.d(i) == E);
    }
  }
}
