#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/slopes.hpp"

using namespace umbrella;
using oracles::running_matrix;

namespace {

std::vector<Rational> qs(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

TEST(SlopeFamily, WeightsAndValidation) {
  const SlopeFamily fam(running_matrix(), {3});
  EXPECT_EQ(format_weights(fam.weights(1)), "1,1,1,2");
  EXPECT_EQ(format_weights(fam.weights(4)), "1,1,1,5");
  EXPECT_EQ(format_weights(fam.weights(0)), "1,1,1,1");
  EXPECT_EQ(fam.increment(3), 1);
  EXPECT_EQ(fam.increment(0), 0);
  EXPECT_THROW(SlopeFamily(running_matrix(), {1}, {1}), ValidationError);
  EXPECT_THROW(SlopeFamily(running_matrix(), {4}), ValidationError);
}

TEST(Candidates, RunningExample) {
  const auto c = candidate_critical_values(SlopeFamily(running_matrix(), {3}));
  for (const auto& x : qs({"2/3", "3"})) EXPECT_NE(std::find(c.begin(), c.end(), x), c.end());
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
  for (const auto& x : c) EXPECT_GT(x, 0);
  EXPECT_TRUE(candidate_critical_values(SlopeFamily(running_matrix(), {})).empty());
}

TEST(SlopesAlong, RunningExample) {
  const SlopeReport r = slopes_along(SlopeFamily(running_matrix(), {3}));
  EXPECT_EQ(r.critical_params(), qs({"2/3", "3"}));
  EXPECT_EQ(r.slopes(), qs({"3/2", "1/3"}));
  // The three umbrellas of the running example sit on the three intervals.
  const std::vector<std::vector<IndexSet>> facets{{{0, 3}, {1, 3}}, {{0, 2}, {1, 3}, {2, 3}}, {{0, 2}, {1, 2}}};
  std::vector<std::vector<IndexSet>> seen;
  for (const auto& iv : r.intervals)
    if (seen.empty() || seen.back() != iv.umbrella.facet_sets()) seen.push_back(iv.umbrella.facet_sets());
  EXPECT_EQ(seen, facets);
  EXPECT_EQ(r.at_zero.facet_sets(), facets[0]);
}

TEST(SlopesAlong, DenseSamplingFindsNoHiddenJump) {
  const SlopeFamily fam(running_matrix(), {3});
  const SlopeReport r = slopes_along(fam);
  for (const auto& iv : r.intervals) {
    const Rational hi = iv.hi ? *iv.hi : iv.lo + 10;
    for (int k = 1; k < 12; ++k) {
      Rational t(k, 12);
      t.canonicalize();
      const Rational s = iv.lo + (hi - iv.lo) * t;
      EXPECT_EQ(compute_umbrella(fam.matrix(), fam.weights(s), {.witnesses = false}).face_sets(),
                iv.umbrella.face_sets())
          << to_string(s);
    }
  }
}

TEST(SlopesAlong, FacetsOnlyAgrees) {
  oracles::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const ToricMatrix a = oracles::random_toric_matrix(rng, 2, 4);
    const SlopeFamily fam(a, {static_cast<std::size_t>(i % 4)});
    SlopeOptions facets;
    facets.facets_only = true;
    EXPECT_EQ(slopes_along(fam).critical_params(), slopes_along(fam, facets).critical_params());
  }
}

TEST(SlopesAlong, JumpsLieInCandidatesAndAreSymmetric) {
  oracles::Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const ToricMatrix a = oracles::random_toric_matrix(rng, 2, 5);
    const SlopeFamily fam(a, {0, 2});
    const SlopeReport r = slopes_along(fam);
    for (const auto& c : r.critical) {
      EXPECT_NE(std::find(r.candidates.begin(), r.candidates.end(), c.s), r.candidates.end());
      EXPECT_EQ(c.slope, 1 / c.s);
    }
    // Scanning from the right: a jump is wherever the right neighbour differs.
    std::vector<Rational> from_right;
    for (std::size_t k = r.intervals.size(); k-- > 1;)
      if (!r.intervals[k].umbrella.same_faces(r.intervals[k - 1].umbrella)) from_right.push_back(r.intervals[k].lo);
    std::reverse(from_right.begin(), from_right.end());
    EXPECT_EQ(from_right, r.critical_params());
  }
}

TEST(SlopesAlong, HomogeneousHasNone) {
  const ToricMatrix a(IntMatrix{{1, 1, 1}, {0, 1, 2}});
  for (IndexSet v : {IndexSet{0}, IndexSet{1}, IndexSet{2}, IndexSet{0, 1}, IndexSet{0, 2}, IndexSet{0, 1, 2}})
    EXPECT_TRUE(slopes_along(SlopeFamily(a, v)).critical.empty());
}

TEST(SlopesAlong, Projectivized) {
  const SlopeReport r = slopes_along(SlopeFamily(oracles::projectivized_matrix(), {}, {0, 1}));
  EXPECT_EQ(r.critical_params(), qs({"1/2"}));
  EXPECT_EQ(r.slopes(), qs({"2"}));
}

TEST(FilterPyramids, EmptyVinfUnchanged) {
  const SlopeFamily fam(running_matrix(), {3});
  const SlopeReport r = slopes_along(fam);
  const SlopeReport f = filter_pyramids(r, fam);
  EXPECT_EQ(f.critical_params(), r.critical_params());
  EXPECT_FALSE(f.conjectural);
  EXPECT_FALSE(f.pyramid_filtered);
}

TEST(FilterPyramids, ProjectivizedIsConjectural) {
  const SlopeFamily fam(oracles::projectivized_matrix(), {}, {0, 1});
  const SlopeReport f = filter_pyramids(slopes_along(fam), fam);
  EXPECT_TRUE(f.conjectural);
  EXPECT_TRUE(f.pyramid_filtered);
}

TEST(PyramidFilteredFaces, DropsApexInVinf) {
  const ToricMatrix a(IntMatrix::identity(2));
  const Umbrella u = compute_umbrella(a, WeightVector::order_filtration(2));
  // Every nonempty face of a simplex is a pyramid over each of its vertices.
  EXPECT_EQ(pyramid_filtered_faces(a, u, {0}), (std::vector<IndexSet>{{}, {1}}));
  EXPECT_EQ(pyramid_filtered_faces(a, u, {}), u.face_sets());
}

// Found by a random search; the jump at s = 3/2 only moves faces that are
// pyramids over a vertex in vinf.
TEST(FilterPyramids, JumpCarriedByPyramidsIsRemoved) {
  const ToricMatrix a(IntMatrix{{2, 1, 0, 4}, {0, 3, -1, 3}});
  const IndexSet vinf{2, 3};
  const SlopeFamily fam(a, {}, vinf);
  const SlopeReport r = slopes_along(fam);
  EXPECT_EQ(r.slopes(), qs({"2", "2/3"}));
  const SlopeReport f = filter_pyramids(r, fam);
  EXPECT_EQ(f.slopes(), qs({"2"}));
  EXPECT_TRUE(f.conjectural);

  const auto it = std::find_if(r.critical.begin(), r.critical.end(),
                               [](const CriticalValue& c) { return c.s == Rational(3, 2); });
  ASSERT_NE(it, r.critical.end());
  const auto left = oracles::sorted_sets(r.intervals[it->left_interval].umbrella.face_sets());
  const auto right = oracles::sorted_sets(r.intervals[it->left_interval + 1].umbrella.face_sets());
  std::vector<IndexSet> changed;
  std::set_symmetric_difference(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(changed));
  EXPECT_FALSE(changed.empty());
  for (const auto& tau : changed) {
    bool pyramid = false;
    for (auto i : set_intersection(tau, vinf)) pyramid |= is_pyramid(a, tau, i);
    EXPECT_TRUE(pyramid) << format_index_set(tau);
  }
}
