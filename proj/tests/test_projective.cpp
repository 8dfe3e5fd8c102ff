#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/projective.hpp"

using namespace umbrella;
using oracles::running_matrix;

TEST(ChartWeights, Examples) {
  const SlopeFamily proj(oracles::projectivized_matrix(), {}, {0, 1});
  EXPECT_EQ(format_weights(chart_weights(proj, {{0, 1}}, Rational(1, 2))), "1/2,1/2,1");
  EXPECT_EQ(format_weights(chart_weights(proj, {{0, 1}}, 0)), "1,1,1");
  const SlopeFamily aff(running_matrix(), {3});
  EXPECT_EQ(format_weights(chart_weights(aff, {}, 1)), "1,1,1,2");
}

TEST(ChartWeights, MissesY) {
  const SlopeFamily proj(oracles::projectivized_matrix(), {}, {0, 1});
  for (const ChartSpec& bad : {ChartSpec{{0}}, ChartSpec{{}}}) {
    try {
      chart_weights(proj, bad, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kChartMissesY);
    }
  }
  const SlopeFamily aff(running_matrix(), {3});
  EXPECT_THROW(chart_weights(aff, {{3}}, 1), Error);
}

TEST(BarUmbrella, CountAndDisjointness) {
  const ToricMatrix a = running_matrix();
  const auto bars = bar_umbrella(a, WeightVector::order_filtration(4));
  EXPECT_EQ(bars.size(), 48u);
  for (const auto& [tau, t] : bars) EXPECT_TRUE(set_intersection(tau, t).empty());
  EXPECT_EQ(std::count(bars.begin(), bars.end(), BarFace{{1, 3}, {3}}), 0);
  EXPECT_EQ(std::count(bars.begin(), bars.end(), BarFace{{1, 3}, {}}), 1);
}

TEST(BarUmbrella, CountFormulaRandom) {
  oracles::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const ToricMatrix a = oracles::random_toric_matrix(rng, 2, 4);
    const WeightVector l = oracles::random_weights(rng, 4);
    std::size_t expected = 0;
    for (const auto& tau : compute_umbrella(a, l).face_sets()) expected += std::size_t{1} << (4 - tau.size());
    EXPECT_EQ(bar_umbrella(a, l).size(), expected);
  }
}

TEST(BarLe, Predicate) {
  EXPECT_TRUE(bar_le({{1}, {3}}, {{1, 3}, {}}));
  EXPECT_FALSE(bar_le({{1}, {}}, {{1, 3}, {}}));
  EXPECT_FALSE(bar_le({{1}, {3}}, {{1, 3}, {0}}));
}

TEST(BarLe, PartialOrder) {
  const auto bars = bar_umbrella(running_matrix(), WeightVector::order_filtration(4));
  for (const auto& x : bars) {
    EXPECT_TRUE(bar_le(x, x));
    for (const auto& y : bars) {
      if (bar_le(x, y) && bar_le(y, x)) {
        EXPECT_EQ(x, y);
      }
      if (!bar_le(x, y)) continue;
      for (const auto& z : bars)
        if (bar_le(y, z)) {
          EXPECT_TRUE(bar_le(x, z));
        }
    }
  }
}

TEST(SlopesAtInfinity, Projectivized) {
  const InfinityReport r = slopes_at_infinity(oracles::projectivized_matrix(), {}, {0, 1});
  EXPECT_EQ(r.slopes(), std::vector<Rational>{2});
  EXPECT_TRUE(r.conjectural);
  EXPECT_TRUE(r.umbrella_jumps.conjectural);
  // The filtered umbrellas do not see the jump; reported, not hidden.
  EXPECT_TRUE(r.filtered_slopes().empty());
}

TEST(SlopesAtInfinity, AffineMatchesSlopesAlong) {
  const InfinityReport r = slopes_at_infinity(running_matrix(), {3}, {});
  EXPECT_FALSE(r.conjectural);
  EXPECT_EQ(r.slopes(), slopes_along(SlopeFamily(running_matrix(), {3})).slopes());
  EXPECT_EQ(r.filtered_slopes(), r.slopes());
}

TEST(SlopesAtInfinity, HomogeneousIsEmpty) {
  const ToricMatrix a(IntMatrix{{1, 1, 1}, {0, 1, 2}});
  EXPECT_TRUE(slopes_at_infinity(a, {}, {0}).slopes().empty());
  EXPECT_TRUE(slopes_at_infinity(a, {2}, {0}).slopes().empty());
}
