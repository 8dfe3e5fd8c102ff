#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace umbrella {

using Integer = mpz_class;
/// GMP keeps mpq_class canonical (reduced, positive denominator) after every
/// arithmetic operation, which is exactly the invariant we need.
using Rational = mpq_class;

using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws ValidationError("bad-rational") on junk.
Rational parse_rational(const std::string& text);
/// Lowest-terms "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

QVector to_rational(const ZVector& v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<ZVector>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<ZVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ZVector column(std::size_t c) const;
  ZVector row(std::size_t r) const;
  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  ZVector operator*(const ZVector& v) const;
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  // h == m * u, column-style Hermite normal form
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
};

/// Column-style HNF: lower echelon, positive pivots, entries left of a pivot
/// reduced into [0, pivot). Zero columns collect at the right.
HermiteForm hnf(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... of length min(rows, cols); trailing
/// zeros mark rank deficiency.
std::vector<Integer> snf(const IntMatrix& m);

/// Exact rank over Q.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<QVector>& vectors);
Integer determinant(const IntMatrix& square);
Rational determinant(const std::vector<QVector>& rows);

/// Solves the square system rows * x = rhs. Returns nullopt when singular.
std::optional<QVector> solve_square(const std::vector<QVector>& rows, const QVector& rhs);

/// Basis of {x : rows * x = 0} over Q (row-reduction, free variables set to 1).
std::vector<QVector> rational_kernel(const std::vector<QVector>& rows, std::size_t cols);

/// A lattice in Z^d stored by its canonical column-HNF basis, so two equal
/// lattices compare equal representationally.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Lattice spanned by `generators` (any spanning set, possibly dependent).
  LatticeBasis(std::size_t ambient_dim, const std::vector<ZVector>& generators);

  static LatticeBasis standard(std::size_t d);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<ZVector>& basis() const { return basis_; }
  IntMatrix as_matrix() const;

  /// Integer coordinates of v in this basis, or nullopt if v is not a member.
  std::optional<ZVector> coordinates(const ZVector& v) const;
  /// Rational coordinates of v, or nullopt if v is outside the Q-span.
  std::optional<QVector> rational_coordinates(const QVector& v) const;
  bool contains(const ZVector& v) const { return coordinates(v).has_value(); }
  bool contains(const LatticeBasis& other) const;

  bool operator==(const LatticeBasis& other) const = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<ZVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Saturated lattice {u in Z^n : m * u = 0}.
LatticeBasis integer_kernel(const IntMatrix& m);

enum class IndexKind { kFinite, kInfinite };

struct LatticeIndex {
  IndexKind kind = IndexKind::kFinite;
  Integer value = 1;  // meaningful only when kind == kFinite

  bool is_finite() const { return kind == IndexKind::kFinite; }
  bool operator==(const LatticeIndex& other) const {
    return kind == other.kind && (kind == IndexKind::kInfinite || value == other.value);
  }
};

/// [super : sub]. Throws Error(kNotSublattice) unless sub is contained in super.
LatticeIndex lattice_index(const LatticeBasis& sub, const LatticeBasis& super);

/// ambient ∩ Q·sub. Throws Error(kNotSublattice) unless sub ⊆ ambient.
LatticeBasis saturation(const LatticeBasis& sub, const LatticeBasis& ambient);

/// Surjection super -> Z^{rank(super) - rank(sub)} with kernel exactly sub.
class QuotientMap {
 public:
  QuotientMap(LatticeBasis super, IntMatrix projection);

  std::size_t target_rank() const { return projection_.rows(); }
  const LatticeBasis& source() const { return super_; }
  /// Coefficient matrix acting on coordinates in the source basis.
  const IntMatrix& projection() const { return projection_; }

  /// Image of an ambient vector; throws Error(kNotSublattice) if v ∉ super.
  ZVector apply(const ZVector& v) const;

 private:
  LatticeBasis super_;
  IntMatrix projection_;
};

/// Throws kNotSublattice if sub ⊄ super and kNonFreeQuotient if sub is not
/// saturated in super.
QuotientMap quotient_coordinates(const LatticeBasis& super, const LatticeBasis& sub);

}  // namespace umbrella
