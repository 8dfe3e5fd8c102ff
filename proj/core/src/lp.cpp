#include <stdexcept>

#include "umbrella/polyhedral.hpp"

namespace umbrella {

namespace {

// Dense tableau kept in canonical form with respect to `basis`.
class Tableau {
 public:
  Tableau(std::size_t cols, std::vector<QVector> rows, QVector rhs, std::vector<std::size_t> basis)
      : cols_(cols), rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t num_rows() const { return rows_.size(); }
  // Kept separately: a problem without constraints has no rows.
  std::size_t num_cols() const { return cols_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  // Maximizes cost over columns [0, active_cols). Bland's rule throughout.
  LPStatus maximize(const QVector& cost, std::size_t active_cols) {
    while (true) {
      std::size_t entering = active_cols;
      for (std::size_t j = 0; j < active_cols; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (entering == active_cols) return LPStatus::kOptimal;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) return LPStatus::kUnbounded;
      pivot(leaving, entering);
    }
  }

  Rational objective_value(const QVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  // Pivots basic columns >= first_artificial out of the basis; drops rows that
  // turn out to be redundant.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!is_basic(j) && rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        rhs_.erase(rhs_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      } else {
        pivot(i, col);
        ++i;
      }
    }
  }

  QVector column_values() const {
    QVector values(num_cols(), Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) values[basis_[i]] = rhs_[i];
    return values;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t cols_;
  std::vector<QVector> rows_;
  QVector rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult lp_maximize(const LPProblem& problem) {
  const std::size_t n = problem.variables;
  std::size_t slacks = 0;
  for (const auto& c : problem.constraints) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint length mismatch");
    if (c.relation == Relation::kStrictLess)
      throw std::invalid_argument("lp_maximize does not accept strict constraints");
    if (c.relation == Relation::kLessEqual) ++slacks;
  }
  const std::size_t m = problem.constraints.size();
  const std::size_t structural = 2 * n + slacks;
  const std::size_t cols = structural + m;

  std::vector<QVector> rows(m, QVector(cols, Rational(0)));
  QVector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    for (std::size_t v = 0; v < n; ++v) {
      rows[i][2 * v] = c.coeffs[v];
      rows[i][2 * v + 1] = -c.coeffs[v];
    }
    if (c.relation == Relation::kLessEqual) rows[i][slack++] = 1;
    rhs[i] = c.rhs;
    if (rhs[i] < 0) {
      for (std::size_t j = 0; j < structural; ++j) rows[i][j] = -rows[i][j];
      rhs[i] = -rhs[i];
    }
    rows[i][structural + i] = 1;
    basis[i] = structural + i;
  }

  Tableau tab(cols, std::move(rows), std::move(rhs), std::move(basis));
  QVector phase1(cols, Rational(0));
  for (std::size_t j = structural; j < cols; ++j) phase1[j] = -1;
  tab.maximize(phase1, cols);
  if (tab.objective_value(phase1) < 0) return {LPStatus::kInfeasible, {}, 0};
  tab.expel_artificials(structural);

  QVector cost(cols, Rational(0));
  if (problem.objective) {
    if (problem.objective->size() != n) throw std::invalid_argument("objective length mismatch");
    for (std::size_t v = 0; v < n; ++v) {
      cost[2 * v] = (*problem.objective)[v];
      cost[2 * v + 1] = -(*problem.objective)[v];
    }
  }
  LPResult result;
  result.status = tab.maximize(cost, structural);
  const QVector values = tab.column_values();
  result.point.resize(n);
  for (std::size_t v = 0; v < n; ++v) result.point[v] = values[2 * v] - values[2 * v + 1];
  result.value = tab.objective_value(cost);
  return result;
}

std::optional<QVector> lp_feasible_with_witness(const LPProblem& problem) {
  bool has_strict = false;
  for (const auto& c : problem.constraints) has_strict |= c.relation == Relation::kStrictLess;
  if (!has_strict) {
    LPProblem plain = problem;
    plain.objective.reset();
    LPResult r = lp_maximize(plain);
    if (r.status == LPStatus::kInfeasible) return std::nullopt;
    return r.point;
  }

  // Extra trailing variable g: strict rows become a.x + g <= b; maximize g <= 1.
  const std::size_t n = problem.variables;
  LPProblem gap;
  gap.variables = n + 1;
  for (const auto& c : problem.constraints) {
    QVector coeffs = c.coeffs;
    coeffs.push_back(c.relation == Relation::kStrictLess ? 1 : 0);
    gap.add(std::move(coeffs), c.relation == Relation::kEqual ? Relation::kEqual : Relation::kLessEqual,
            c.rhs);
  }
  QVector cap(n + 1, Rational(0));
  cap[n] = 1;
  gap.add(cap, Relation::kLessEqual, 1);
  gap.objective = cap;
  LPResult r = lp_maximize(gap);
  if (r.status != LPStatus::kOptimal || r.value <= 0) return std::nullopt;
  r.point.pop_back();
  return r.point;
}

}  // namespace umbrella
