#include "umbrella/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "umbrella/errors.hpp"

namespace umbrella {

namespace {

QVector difference(const QVector& a, const QVector& b) {
  QVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Hyperplane {
  QVector normal;
  Rational offset;
  std::vector<std::size_t> members;
};

// Facets of conv(points), points full-dimensional in Q^m with m >= 2.
std::vector<Hyperplane> facets_by_subset_scan(const std::vector<QVector>& points) {
  const std::size_t m = points.front().size();
  std::vector<Hyperplane> facets;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(points.size(), m, [&](const std::vector<std::size_t>& subset) {
    std::vector<QVector> diffs;
    for (std::size_t k = 1; k < subset.size(); ++k)
      diffs.push_back(difference(points[subset[k]], points[subset[0]]));
    if (rank(diffs) != m - 1) return;
    const auto kernel = rational_kernel(diffs, m);
    const QVector& normal = kernel.front();
    const Rational offset = dot(normal, points[subset[0]]);
    bool below = false, above = false;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Rational v = dot(normal, points[i]);
      if (v < offset) below = true;
      else if (v > offset) above = true;
      else members.push_back(i);
    }
    if (below && above) return;
    if (!seen.insert(members).second) return;
    facets.push_back({normal, offset, std::move(members)});
  });
  return facets;
}

std::vector<std::vector<std::size_t>> triangulate_impl(const std::vector<QVector>& points) {
  const std::size_t m = points.front().size();
  if (m == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i][0] < points[lo][0]) lo = i;
      if (points[i][0] > points[hi][0]) hi = i;
    }
    return {{lo, hi}};
  }
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& facet : facets_by_subset_scan(points)) {
    if (std::find(facet.members.begin(), facet.members.end(), 0) != facet.members.end()) continue;
    // Dropping a coordinate where the normal is nonzero is injective on the
    // facet's hyperplane.
    std::size_t drop = 0;
    while (facet.normal[drop] == 0) ++drop;
    std::vector<QVector> projected;
    for (auto i : facet.members) {
      QVector q;
      for (std::size_t c = 0; c < m; ++c)
        if (c != drop) q.push_back(points[i][c]);
      projected.push_back(std::move(q));
    }
    for (const auto& sub : triangulate_impl(projected)) {
      std::vector<std::size_t> simplex{0};
      for (auto k : sub) simplex.push_back(facet.members[k]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

std::vector<QVector> dedupe(const std::vector<QVector>& points) {
  std::vector<QVector> out;
  for (const auto& p : points)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

}  // namespace

std::size_t affine_dim(const std::vector<QVector>& points) {
  if (points.empty()) throw std::invalid_argument("affine_dim of an empty point set");
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(difference(points[i], points[0]));
  return rank(diffs);
}

std::size_t linear_span_dim(const std::vector<QVector>& points) { return rank(points); }

Polytope Polytope::in_lattice(const LatticeBasis& lattice, const std::vector<ZVector>& ambient_points) {
  Polytope p;
  p.dim = lattice.rank();
  for (const auto& v : ambient_points) {
    auto c = lattice.rational_coordinates(to_rational(v));
    if (!c) throw std::invalid_argument("point outside the lattice's rational span");
    p.points.push_back(std::move(*c));
  }
  return p;
}

Polytope Polytope::from_integer_points(std::size_t dim, const std::vector<ZVector>& points) {
  Polytope p;
  p.dim = dim;
  for (const auto& v : points) {
    if (v.size() != dim) throw std::invalid_argument("point dimension mismatch");
    p.points.push_back(to_rational(v));
  }
  return p;
}

std::vector<std::vector<std::size_t>> triangulate(const std::vector<QVector>& points) {
  if (points.empty()) return {};
  const std::size_t m = points.front().size();
  if (affine_dim(points) != m) throw std::invalid_argument("triangulate needs full-dimensional input");
  if (m == 0) return {{0}};
  return triangulate_impl(points);
}

Rational normalized_volume(const Polytope& p) {
  if (p.points.empty()) return 0;
  if (p.dim == 0) return 1;
  const auto points = dedupe(p.points);
  if (affine_dim(points) < p.dim) return 0;
  Rational total = 0;
  for (const auto& simplex : triangulate(points)) {
    std::vector<QVector> edges;
    for (std::size_t k = 1; k < simplex.size(); ++k)
      edges.push_back(difference(points[simplex[k]], points[simplex[0]]));
    total += abs(determinant(edges));
  }
  return total;
}

bool in_convex_hull(const std::vector<QVector>& points, const QVector& q) {
  if (points.empty()) return false;
  // Variables: convex weights lambda_i.
  LPProblem lp;
  lp.variables = points.size();
  for (std::size_t c = 0; c < q.size(); ++c) {
    QVector row(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) row[i] = points[i][c];
    lp.add(std::move(row), Relation::kEqual, q[c]);
  }
  lp.add(QVector(points.size(), Rational(1)), Relation::kEqual, 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    QVector row(points.size(), Rational(0));
    row[i] = -1;
    lp.add(std::move(row), Relation::kLessEqual, 0);
  }
  return lp_feasible_with_witness(lp).has_value();
}

Rational volume_difference(const Polytope& p, const Polytope& q) {
  if (p.dim != q.dim) throw std::invalid_argument("polytopes live in different lattices");
  for (const auto& point : q.points)
    if (!in_convex_hull(p.points, point))
      throw Error(ErrorKind::kNotContained, "second polytope is not contained in the first");
  return normalized_volume(p) - normalized_volume(q);
}

}  // namespace umbrella
