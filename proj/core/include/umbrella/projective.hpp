#pragma once

#include <vector>

#include "umbrella/multiplicity.hpp"
#include "umbrella/slopes.hpp"

namespace umbrella {

/// Chart of (P^1)^n: the variables in `inverted` are replaced by their
/// coordinates at infinity.
struct ChartSpec {
  IndexSet inverted;
};

/// Weights on the chart at parameter s: 1+s on v0, 1-s on vinf, 1 elsewhere.
/// Throws Error(kChartMissesY) unless the chart inverts all of vinf and none
/// of v0.
WeightVector chart_weights(const SlopeFamily& fam, const ChartSpec& chart, const Rational& s);

/// All (tau, T) with tau a face of the umbrella and T disjoint from tau.
std::vector<BarFace> bar_umbrella(const ToricMatrix& a, const WeightVector& l);

/// (tau', T') <= (tau, T) iff tau' ⊆ tau and tau \ tau' ⊆ T' ⊇ T.
bool bar_le(const BarFace& lower, const BarFace& upper);

struct InfinityReport {
  /// Jumps of the full umbrella along the chart weights: the possible slope
  /// values.
  SlopeReport umbrella_jumps;
  /// Jumps that survive removing pyramids with apex in vinf.
  SlopeReport filtered;
  bool conjectural = false;

  std::vector<Rational> slopes() const { return umbrella_jumps.slopes(); }
  std::vector<Rational> filtered_slopes() const { return filtered.slopes(); }
};

InfinityReport slopes_at_infinity(const ToricMatrix& a, const IndexSet& v0, const IndexSet& vinf,
                                  const SlopeOptions& options = {});

}  // namespace umbrella
