#include "umbrella/exactmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "umbrella/errors.hpp"

namespace umbrella {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  auto is_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) {
    throw ValidationError("bad-rational", "cannot parse rational '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ValidationError("bad-rational", "zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// --- IntMatrix ---------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVector>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<ZVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

ZVector IntMatrix::column(std::size_t c) const {
  ZVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ZVector IntMatrix::row(std::size_t r) const {
  return ZVector(data_.begin() + static_cast<long>(r * cols_),
                 data_.begin() + static_cast<long>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, idx[k]);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

ZVector IntMatrix::operator*(const ZVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  ZVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// --- normal forms ------------------------------------------------------------

namespace {

// (col_a, col_b) <- (s*col_a + t*col_b, -(b/g)*col_a + (a/g)*col_b)
void combine_columns(IntMatrix& m, std::size_t ca, std::size_t cb, const Integer& s,
                     const Integer& t, const Integer& a_over_g, const Integer& b_over_g) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer x = m(r, ca);
    Integer y = m(r, cb);
    m(r, ca) = s * x + t * y;
    m(r, cb) = a_over_g * y - b_over_g * x;
  }
}

void add_column_multiple(IntMatrix& m, std::size_t target, std::size_t source,
                         const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += factor * m(r, source);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < h.rows() && pivot_col < h.cols(); ++r) {
    for (std::size_t c = pivot_col + 1; c < h.cols(); ++c) {
      if (h(r, c) == 0) continue;
      Integer a = h(r, pivot_col);
      Integer b = h(r, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer a_over_g = a / g;
      Integer b_over_g = b / g;
      combine_columns(h, pivot_col, c, s, t, a_over_g, b_over_g);
      combine_columns(u, pivot_col, c, s, t, a_over_g, b_over_g);
    }
    if (h(r, pivot_col) == 0) continue;
    if (h(r, pivot_col) < 0) {
      negate_column(h, pivot_col);
      negate_column(u, pivot_col);
    }
    const Integer pivot = h(r, pivot_col);
    for (std::size_t c = 0; c < pivot_col; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      add_column_multiple(h, c, pivot_col, -q);
      add_column_multiple(u, c, pivot_col, -q);
    }
    ++pivot_col;
  }
  out.rank = pivot_col;
  return out;
}

std::vector<Integer> snf(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t k = std::min(rows, cols);
  std::vector<Integer> diag(k, Integer(0));

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Full pivoting on the smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (m(r, c) == 0) continue;
          if (pr == rows || abs(m(r, c)) < abs(m(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) return diag;  // trailing block is zero

      if (pr != t)
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
      if (pc != t)
        for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

      bool clean = true;
      const Integer pivot = m(t, t);
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides_all = true;
      for (std::size_t r = t + 1; r < rows && divides_all; ++r)
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), pivot.get_mpz_t())) {
            for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    diag[t] = abs(m(t, t));
  }
  return diag;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<QVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<QVector> to_rows(const IntMatrix& m) {
  std::vector<QVector> rows(m.rows(), QVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  auto rows = to_rows(m);
  return row_reduce(rows, m.cols()).size();
}

std::size_t rank(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return 0;
  auto rows = vectors;
  return row_reduce(rows, rows.front().size()).size();
}

Rational determinant(const std::vector<QVector>& input) {
  auto rows = input;
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[c][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return det;
}

Integer determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of non-square");
  const Rational d = determinant(to_rows(square));
  return d.get_num();
}

std::optional<QVector> solve_square(const std::vector<QVector>& rows, const QVector& rhs) {
  const std::size_t n = rows.size();
  std::vector<QVector> aug(n, QVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = rows[r][c];
    aug[r][n] = rhs[r];
  }
  const auto pivots = row_reduce(aug, n);
  if (pivots.size() < n) return std::nullopt;
  QVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

std::vector<QVector> rational_kernel(const std::vector<QVector>& input, std::size_t cols) {
  auto rows = input;
  const auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- lattices ----------------------------------------------------------------

LatticeBasis::LatticeBasis(std::size_t ambient_dim, const std::vector<ZVector>& generators)
    : ambient_dim_(ambient_dim) {
  if (generators.empty()) return;
  const IntMatrix g = IntMatrix::from_columns(ambient_dim, generators);
  const HermiteForm form = hnf(g);
  for (std::size_t c = 0; c < form.rank; ++c) {
    ZVector col = form.h.column(c);
    std::size_t p = 0;
    while (col[p] == 0) ++p;
    pivots_.push_back(p);
    basis_.push_back(std::move(col));
  }
}

LatticeBasis LatticeBasis::standard(std::size_t d) {
  std::vector<ZVector> gens(d, ZVector(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) gens[i][i] = 1;
  return LatticeBasis(d, gens);
}

IntMatrix LatticeBasis::as_matrix() const { return IntMatrix::from_columns(ambient_dim_, basis_); }

std::optional<ZVector> LatticeBasis::coordinates(const ZVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector dimension mismatch");
  ZVector rem = v;
  ZVector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Integer& pivot = basis_[k][pivots_[k]];
    if (!mpz_divisible_p(rem[pivots_[k]].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    coords[k] = rem[pivots_[k]] / pivot;
    if (coords[k] == 0) continue;
    for (std::size_t r = pivots_[k]; r < ambient_dim_; ++r) rem[r] -= coords[k] * basis_[k][r];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

std::optional<QVector> LatticeBasis::rational_coordinates(const QVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector dimension mismatch");
  QVector rem = v;
  QVector coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coords[k] = rem[pivots_[k]] / Rational(basis_[k][pivots_[k]]);
    if (coords[k] == 0) continue;
    for (std::size_t r = pivots_[k]; r < ambient_dim_; ++r) rem[r] -= coords[k] * basis_[k][r];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coords;
}

bool LatticeBasis::contains(const LatticeBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const ZVector& v) { return contains(v); });
}

LatticeBasis integer_kernel(const IntMatrix& m) {
  const HermiteForm form = hnf(m);
  std::vector<ZVector> gens;
  for (std::size_t c = form.rank; c < m.cols(); ++c) gens.push_back(form.u.column(c));
  return LatticeBasis(m.cols(), gens);
}

namespace {

// Columns: coordinates of sub's basis vectors in super's basis.
IntMatrix relative_coordinates(const LatticeBasis& sub, const LatticeBasis& super) {
  if (sub.ambient_dim() != super.ambient_dim())
    throw Error(ErrorKind::kNotSublattice, "lattices live in different ambient spaces");
  std::vector<ZVector> cols;
  for (const auto& v : sub.basis()) {
    auto c = super.coordinates(v);
    if (!c) throw Error(ErrorKind::kNotSublattice, "sublattice is not contained in superlattice");
    cols.push_back(std::move(*c));
  }
  return IntMatrix::from_columns(super.rank(), cols);
}

// Integer basis (as rows) of {y in Z^r : y^T * s = 0}.
std::vector<ZVector> left_kernel(const IntMatrix& s) {
  if (s.cols() == 0) {
    return LatticeBasis::standard(s.rows()).basis();
  }
  return integer_kernel(s.transpose()).basis();
}

}  // namespace

LatticeIndex lattice_index(const LatticeBasis& sub, const LatticeBasis& super) {
  const IntMatrix coords = relative_coordinates(sub, super);
  if (sub.rank() < super.rank()) return {IndexKind::kInfinite, 0};
  if (super.rank() == 0) return {IndexKind::kFinite, 1};
  return {IndexKind::kFinite, abs(determinant(coords))};
}

LatticeBasis saturation(const LatticeBasis& sub, const LatticeBasis& ambient) {
  const IntMatrix coords = relative_coordinates(sub, ambient);
  const std::size_t r = ambient.rank();
  std::vector<ZVector> sat_coords;
  if (sub.rank() == 0) {
    // saturation of the zero lattice is zero
  } else {
    const auto normals = left_kernel(coords);
    if (normals.empty()) {
      sat_coords = LatticeBasis::standard(r).basis();
    } else {
      sat_coords = integer_kernel(IntMatrix::from_rows(normals)).basis();
    }
  }
  std::vector<ZVector> gens;
  for (const auto& c : sat_coords) {
    ZVector v(ambient.ambient_dim(), Integer(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[k] * ambient.basis()[k][i];
    gens.push_back(std::move(v));
  }
  return LatticeBasis(ambient.ambient_dim(), gens);
}

QuotientMap::QuotientMap(LatticeBasis super, IntMatrix projection)
    : super_(std::move(super)), projection_(std::move(projection)) {}

ZVector QuotientMap::apply(const ZVector& v) const {
  auto c = super_.coordinates(v);
  if (!c) throw Error(ErrorKind::kNotSublattice, "vector is not in the source lattice");
  if (projection_.rows() == 0) return {};
  return projection_ * *c;
}

QuotientMap quotient_coordinates(const LatticeBasis& super, const LatticeBasis& sub) {
  const IntMatrix coords = relative_coordinates(sub, super);
  const LatticeIndex idx = lattice_index(sub, saturation(sub, super));
  if (!idx.is_finite() || idx.value != 1)
    throw Error(ErrorKind::kNonFreeQuotient, "sublattice is not saturated; quotient has torsion");
  std::vector<ZVector> rows;
  if (sub.rank() == 0) {
    rows = LatticeBasis::standard(super.rank()).basis();
  } else {
    rows = left_kernel(coords);
  }
  IntMatrix proj = rows.empty() ? IntMatrix(0, super.rank()) : IntMatrix::from_rows(rows);
  return QuotientMap(super, std::move(proj));
}

}  // namespace umbrella
