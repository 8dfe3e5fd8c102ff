#pragma once

#include <optional>
#include <vector>

#include "umbrella/umbrella.hpp"

namespace umbrella {

/// L(s) = F + s V with V_j = +1 on v0 (vanishing on Y), -1 on vinf (at
/// infinity) and 0 elsewhere. s = q/p, so a jump at s* is the slope 1/s*.
class SlopeFamily {
 public:
  /// Throws ValidationError("v-overlap") or ("index-out-of-range").
  SlopeFamily(ToricMatrix a, IndexSet v0, IndexSet vinf = {});

  const ToricMatrix& matrix() const { return a_; }
  const IndexSet& v0() const { return v0_; }
  const IndexSet& vinf() const { return vinf_; }
  int increment(std::size_t j) const { return v_[j]; }
  WeightVector weights(const Rational& s) const;

 private:
  ToricMatrix a_;
  IndexSet v0_, vinf_;
  std::vector<int> v_;
};

struct SlopeInterval {
  Rational lo;                // 0 for the first interval
  std::optional<Rational> hi; // nullopt: unbounded
  Rational sample;
  Umbrella umbrella;
};

struct CriticalValue {
  Rational s;
  Rational slope;  // 1/s
  Umbrella at;     // snapshot at s itself
  std::size_t left_interval = 0;
};

struct SlopeReport {
  std::vector<Rational> candidates;
  std::vector<CriticalValue> critical;
  std::vector<SlopeInterval> intervals;
  Umbrella at_zero;
  bool pyramid_filtered = false;
  bool conjectural = false;

  std::vector<Rational> critical_params() const;
  std::vector<Rational> slopes() const;
};

/// Positive roots of the affine-in-s conditions "a_i lies on the hyperplane
/// through the a_j^{L(s)}, j ∈ tau" over rank-d subsets tau; sorted, unique.
std::vector<Rational> candidate_critical_values(const SlopeFamily& fam);

struct SlopeOptions {
  /// Compare facet sets instead of full face sets when detecting jumps.
  bool facets_only = false;
  /// Extra interior points per interval checked for constancy.
  std::size_t spot_checks = 2;
};

/// Jumps of the umbrella along s ∈ (0, ∞). The reference left of the first
/// candidate is its midpoint s1/2; the s = 0 umbrella is kept as a snapshot.
SlopeReport slopes_along(const SlopeFamily& fam, const SlopeOptions& options = {});

/// Faces of `umb` that are not pyramids with apex in vinf.
std::vector<IndexSet> pyramid_filtered_faces(const ToricMatrix& a, const Umbrella& umb,
                                             const IndexSet& vinf);

/// Recomputes jumps on the pyramid-filtered face sets. The result is marked
/// conjectural whenever vinf is nonempty; with vinf empty the input is returned.
SlopeReport filter_pyramids(const SlopeReport& report, const SlopeFamily& fam);

}  // namespace umbrella
