#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbrella/exactmath.hpp"

namespace umbrella {

/// Sorted, duplicate-free set of 0-based column indices.
using IndexSet = std::vector<std::size_t>;

bool is_subset(const IndexSet& small, const IndexSet& big);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
/// "{1,4}" with 1-based indices; "{}" for the empty set.
std::string format_index_set(const IndexSet& s);

enum class LatticePolicy { kRequireFull, kAllowSublattice };

/// Integer matrix with nonzero columns, rank d, a pointed semigroup NA and
/// (by default) ZA = Z^d. The constructor validates and throws
/// ValidationError with one of the reasons "bad-dimensions", "zero-column",
/// "rank-deficient", "not-pointed" or "lattice-not-full".
///
/// kAllowSublattice admits matrices such as [[3,1,0],[0,1,3]]; umbrellas,
/// slopes and toric ideals do not see the lattice, multiplicities do.
class ToricMatrix {
 public:
  explicit ToricMatrix(IntMatrix a, LatticePolicy policy = LatticePolicy::kRequireFull);

  const IntMatrix& matrix() const { return a_; }
  std::size_t d() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }
  const ZVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<ZVector>& columns() const { return columns_; }
  std::vector<ZVector> columns(const IndexSet& tau) const;

  /// h0 with h0 . a_j >= 1 for every column.
  const QVector& pointedness_witness() const { return witness_; }
  /// Integer positive grading deg(d_j) = g . a_j with g a scaled witness.
  const ZVector& positive_grading() const { return grading_; }
  bool lattice_full() const { return lattice_full_; }

 private:
  IntMatrix a_;
  std::vector<ZVector> columns_;
  QVector witness_;
  ZVector grading_;
  bool lattice_full_ = true;
};

/// Rational weights (L_{d_1}, ..., L_{d_n}); any signs allowed.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(QVector values) : values_(std::move(values)) {}

  static WeightVector constant(std::size_t n, const Rational& c) {
    return WeightVector(QVector(n, c));
  }
  static WeightVector order_filtration(std::size_t n) { return constant(n, 1); }
  static WeightVector zero(std::size_t n) { return constant(n, 0); }

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t j) const { return values_[j]; }
  const QVector& values() const { return values_; }
  WeightVector scaled(const Rational& c) const;
  bool operator==(const WeightVector& other) const = default;

 private:
  QVector values_;
};

/// Parses "1,1,1,2" or "1/2,-3,0". Throws ValidationError("bad-rational").
WeightVector parse_weights(const std::string& text);
std::string format_weights(const WeightVector& w);

struct Face {
  IndexSet members;
  /// dim_Q(Q tau) - 1; -1 encodes the empty face.
  int dim = -1;
  /// Supporting functional: h . a_j = L_j on members, h . a_i < L_i elsewhere.
  QVector witness;

  bool is_empty() const { return members.empty(); }
  /// "empty" for the empty face, the dimension otherwise.
  std::string dim_label() const;
};

/// Face poset of the (A,L)-umbrella: faces sorted by dimension, then
/// lexicographically by index set.
class Umbrella {
 public:
  Umbrella() = default;
  Umbrella(std::size_t d, std::vector<Face> faces);

  std::size_t d() const { return d_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Face> by_dim(int k) const;
  std::vector<Face> facets() const { return by_dim(static_cast<int>(d_) - 1); }
  std::vector<IndexSet> face_sets() const;
  std::vector<IndexSet> facet_sets() const;

  bool contains(const IndexSet& tau) const;
  const Face* find(const IndexSet& tau) const;
  bool is_facet(const IndexSet& tau) const;
  /// Facets containing tau.
  std::vector<IndexSet> facets_containing(const IndexSet& tau) const;

  /// Combinatorial equality (index sets only, witnesses ignored).
  bool same_faces(const Umbrella& other) const { return face_sets() == other.face_sets(); }

 private:
  std::size_t d_ = 0;
  std::vector<Face> faces_;
};

struct FaceTest {
  bool is_face = false;
  QVector witness;
};

/// tau is a face iff some h has h . a_j = L_j on tau and h . a_i < L_i off tau.
FaceTest is_face(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau);

struct UmbrellaOptions {
  /// Solve an LP per face for its supporting functional. Sweeps that only
  /// compare index sets switch this off.
  bool witnesses = true;
};

Umbrella compute_umbrella(const ToricMatrix& a, const WeightVector& l,
                          const UmbrellaOptions& options = {});
Umbrella zero_umbrella(const ToricMatrix& a);

/// Index sets of the faces of the pointed cone spanned by `generators`
/// (the apex contributes the empty set, the whole cone contributes all).
std::vector<IndexSet> cone_faces(const std::vector<ZVector>& generators);

std::size_t span_dim(const ToricMatrix& a, const IndexSet& tau);
/// dim(tau \ {i}) < dim(tau). Throws std::invalid_argument unless i ∈ tau.
bool is_pyramid(const ToricMatrix& a, const IndexSet& tau, std::size_t i);
/// All a_j^L on one hyperplane, i.e. some h has h . a_j = L_j for every j.
bool is_L_homogeneous(const ToricMatrix& a, const WeightVector& l);

}  // namespace umbrella
