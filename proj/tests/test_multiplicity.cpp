#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/multiplicity.hpp"

using namespace umbrella;
using oracles::running_matrix;

namespace {

WeightVector w(const std::string& s) { return parse_weights(s); }

std::map<IndexSet, Integer> table(std::initializer_list<std::pair<const IndexSet, Integer>> xs) { return xs; }

}  // namespace

TEST(Nu, Examples) {
  const ToricMatrix a = running_matrix();
  EXPECT_EQ(nu(a, w("1,1,1,1"), {0, 3}), 12);
  EXPECT_EQ(nu(a, w("1,1,1,2"), {2, 3}), 7);
  EXPECT_EQ(nu(ToricMatrix(IntMatrix::identity(2)), w("1,1"), {0, 1}), 1);
  try {
    nu(a, w("1,1,1,1"), {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFacet);
  }
}

TEST(Mu, Examples) {
  const ToricMatrix a = running_matrix();
  EXPECT_EQ(mu(a, w("1,1,1,2"), {2}), 10);
  EXPECT_EQ(mu_contribution(a, {2}, {0, 2}), 3);
  EXPECT_EQ(mu_contribution(a, {2}, {2, 3}), 7);
  EXPECT_EQ(mu(a, w("1,1,1,2"), {3}), 8);
  EXPECT_EQ(mu(a, w("1,1,1,5"), {1}), 2);
  try {
    mu(a, w("1,1,1,1"), {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFace);
  }
}

TEST(Mu, FacetsEqualNu) {
  const ToricMatrix a = running_matrix();
  for (const char* l : {"1,1,1,1", "1,1,1,2", "1,1,1,5", "1,1,1,0", "3,-1,2,1"}) {
    const Umbrella u = compute_umbrella(a, w(l));
    for (const auto& t : u.facet_sets()) EXPECT_EQ(mu(a, u, t), nu(a, u, t)) << l;
  }
}

TEST(RankVolume, Examples) {
  EXPECT_EQ(rank_volume(running_matrix()), 13);
  EXPECT_EQ(rank_volume(ToricMatrix(IntMatrix::identity(3))), 1);
  EXPECT_EQ(rank_volume(ToricMatrix(IntMatrix{{1, 1, 1}, {0, 1, 2}})), 2);
}

TEST(CharCycle, ExampleTable) {
  const ToricMatrix a = running_matrix();
  EXPECT_EQ(char_cycle(a, w("1,1,1,1")).mu,
            table({{{}, 13}, {{0}, 12}, {{1}, 1}, {{3}, 13}, {{0, 3}, 12}, {{1, 3}, 1}}));
  EXPECT_EQ(char_cycle(a, w("1,1,1,2")).mu, table({{{}, 11},
                                                   {{0}, 3},
                                                   {{1}, 1},
                                                   {{2}, 10},
                                                   {{3}, 8},
                                                   {{0, 2}, 3},
                                                   {{1, 3}, 1},
                                                   {{2, 3}, 7}}));
  EXPECT_EQ(char_cycle(a, w("1,1,1,5")).mu,
            table({{{}, 5}, {{0}, 3}, {{1}, 2}, {{2}, 5}, {{0, 2}, 3}, {{1, 2}, 2}}));
}

TEST(CharCycle, Degrees) {
  const ToricMatrix a = running_matrix();
  EXPECT_EQ(char_cycle(a, w("1,1,1,1")).degree(), 13);
  EXPECT_EQ(char_cycle(a, w("1,1,1,2")).degree(), 11);
  EXPECT_EQ(char_cycle(a, w("1,1,1,5")).degree(), 5);
  EXPECT_EQ(char_cycle(a, w("1,1,1,2")).nu, table({{{0, 2}, 3}, {{1, 3}, 1}, {{2, 3}, 7}}));
}

TEST(CharCycle, IdentityMatrix) {
  const auto c = char_cycle(ToricMatrix(IntMatrix::identity(3)), w("1,1,1"));
  EXPECT_EQ(c.mu.size(), 8u);
  for (const auto& [tau, m] : c.mu) EXPECT_EQ(m, 1);
}

TEST(CharCycle, EmptyFaceBoundAndRelabeling) {
  oracles::Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const ToricMatrix a = oracles::random_toric_matrix(rng, 2, 4);
    const WeightVector l = oracles::random_weights(rng, 4);
    const CharCycle c = char_cycle(a, l);
    EXPECT_LE(c.mu.at({}), rank_volume(a));

    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix pm(2, 4);
    QVector pl(4);
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t r = 0; r < 2; ++r) pm(r, j) = a.matrix()(r, perm[j]);
      pl[j] = l[perm[j]];
    }
    EXPECT_EQ(char_cycle(ToricMatrix(pm), WeightVector(pl)).degree(), c.degree());
  }
}

TEST(BarCharCycle, Examples) {
  const ToricMatrix a = running_matrix();
  const auto b = bar_char_cycle(a, w("1,1,1,1"));
  EXPECT_EQ(b.mu.at({{1, 3}, {2}}), 2);
  EXPECT_EQ(b.mu.at({{}, {0, 1}}), 52);
  const auto c = char_cycle(a, w("1,1,1,1"));
  for (const auto& [tau, m] : c.mu) EXPECT_EQ(b.mu.at({tau, {}}), m);
  EXPECT_EQ(b.mu.size(), 48u);
}
