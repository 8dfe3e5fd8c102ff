#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "umbrella/exactmath.hpp"

namespace umbrella {

enum class Relation { kLessEqual, kEqual, kStrictLess };

struct LinearConstraint {
  QVector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs = 0;
};

/// Linear program over free rational variables.
struct LPProblem {
  std::size_t variables = 0;
  std::vector<LinearConstraint> constraints;
  std::optional<QVector> objective;  // maximized when present

  void add(QVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  QVector point;
  Rational value = 0;
};

/// Exact two-phase simplex with Bland's rule. Strict constraints are rejected
/// (std::invalid_argument); use lp_feasible_with_witness for those.
LPResult lp_maximize(const LPProblem& problem);

/// A point satisfying every constraint exactly, or nullopt when infeasible.
/// Strict inequalities are handled by maximizing a shared gap variable and
/// requiring a positive optimum.
std::optional<QVector> lp_feasible_with_witness(const LPProblem& problem);

std::size_t affine_dim(const std::vector<QVector>& points);
std::size_t linear_span_dim(const std::vector<QVector>& points);

/// Generating points of a polytope in coordinates of a lattice of rank `dim`.
struct Polytope {
  std::size_t dim = 0;
  std::vector<QVector> points;

  /// Converts ambient points into coordinates of `lattice`. Points outside the
  /// lattice's rational span are rejected with std::invalid_argument.
  static Polytope in_lattice(const LatticeBasis& lattice, const std::vector<ZVector>& ambient_points);
  static Polytope from_integer_points(std::size_t dim, const std::vector<ZVector>& points);
};

/// Simplices (index lists into `points`) of a triangulation of conv(points),
/// which must be full-dimensional in Q^m. Facets come from a subset scan and
/// are coned from the first point.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<QVector>& points);

/// dim! times the Euclidean volume in lattice coordinates; 0 for
/// lower-dimensional input, 1 for a point in a rank-0 lattice.
Rational normalized_volume(const Polytope& p);

/// True iff q ∈ conv(points), decided by LP.
bool in_convex_hull(const std::vector<QVector>& points, const QVector& q);

/// normalized_volume(p) - normalized_volume(q); throws Error(kNotContained)
/// unless every generator of q lies in conv(p).
Rational volume_difference(const Polytope& p, const Polytope& q);

}  // namespace umbrella
