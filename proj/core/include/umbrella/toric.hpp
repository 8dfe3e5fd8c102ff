#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbrella/umbrella.hpp"

namespace umbrella {

/// Exponent vector of ∂^u.
struct Monomial {
  std::vector<long> exps;

  Monomial() = default;
  explicit Monomial(std::vector<long> e) : exps(std::move(e)) {}
  static Monomial one(std::size_t n) { return Monomial(std::vector<long>(n, 0)); }

  std::size_t size() const { return exps.size(); }
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  auto operator<=>(const Monomial& other) const = default;
};

/// "d1*d2^12"; "1" for the unit monomial.
std::string format_monomial(const Monomial& m);

/// □_u = ∂^{u+} - ∂^{u-}.
struct Binomial {
  Monomial plus;
  Monomial minus;

  static Binomial from_kernel_vector(const ZVector& u);
  ZVector exponent_difference() const;
  bool operator==(const Binomial&) const = default;
};

/// A term order given by integer weight rows compared in turn, with lex on
/// the exponents as the final tie-break.
class TermOrder {
 public:
  enum class TieBreak { kGrevlex, kLex };

  explicit TermOrder(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {}

  /// Weight L first (scaled to integers), then the tie-break.
  static TermOrder weighted(const WeightVector& l, TieBreak tie = TieBreak::kGrevlex);
  /// Graded reverse lex with respect to `grading`, variable j smallest.
  static TermOrder graded_revlex_last(const ZVector& grading, std::size_t j);
  static TermOrder grevlex(std::size_t n) { return weighted(WeightVector::zero(n)); }

  /// Negative, zero or positive.
  int compare(const Monomial& x, const Monomial& y) const;
  bool greater(const Monomial& x, const Monomial& y) const { return compare(x, y) > 0; }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// lead - tail, or the monomial lead alone when tail is absent. Coefficients
/// are ±1 throughout, so ideal membership only ever sees these two shapes.
struct Poly {
  Monomial lead;
  std::optional<Monomial> tail;

  bool is_monomial() const { return !tail.has_value(); }
  bool operator==(const Poly&) const = default;
};

std::string format_poly(const Poly& p);

/// Orients lead - tail so that lead is the larger term; nullopt when the
/// two terms coincide (the polynomial is zero).
std::optional<Poly> make_poly(const Monomial& x, const std::optional<Monomial>& y, const TermOrder& order);

/// Normal form modulo `basis` (fully reduced). nullopt means zero.
std::optional<Poly> normal_form(const Poly& f, const std::vector<Poly>& basis, const TermOrder& order);
std::optional<Monomial> normal_form(const Monomial& m, const std::vector<Poly>& basis, const TermOrder& order);

/// Reduced Gröbner basis of the ideal generated by `gens`. Terminates for
/// ideals homogeneous with respect to some positive grading, which is the
/// only situation it is used in.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order);

/// I : ∂_j^∞ for an ideal homogeneous under `grading`.
std::vector<Poly> saturate_variable(const std::vector<Poly>& gens, std::size_t j, const ZVector& grading);

/// Toric ideal of an arbitrary integer matrix with a positive grading
/// (columns need not generate Z^d). Reduced grevlex basis.
std::vector<Poly> toric_ideal_basis(const IntMatrix& a, const ZVector& grading);

/// Binomial generators of I_A (the reduced grevlex Gröbner basis).
std::vector<Binomial> toric_ideal(const ToricMatrix& a);

struct MarkedElement {
  Poly poly;          // lead marked by the weight-then-tie-break order
  Poly leading_form;  // σ^L: lead - tail when both have equal L-degree, else lead
};

struct MarkedGroebnerBasis {
  WeightVector weight;
  TermOrder::TieBreak tie = TermOrder::TieBreak::kGrevlex;
  std::vector<MarkedElement> elements;
  bool reduced = true;

  /// The leading forms; a Gröbner basis of I^L under the tie-break order.
  std::vector<Poly> leading_forms() const;
  TermOrder tie_order() const;
};

MarkedGroebnerBasis initial_ideal(const std::vector<Binomial>& gens, const WeightVector& l,
                                  TermOrder::TieBreak tie = TermOrder::TieBreak::kGrevlex);

/// Generators of in_L(I) computed through a homogenizing variable d0 of
/// weight 1: homogenize, saturate by d0, set d0 = 0. Needs L > 0.
std::vector<Poly> initial_ideal_homogenized(const std::vector<Binomial>& gens, const WeightVector& l);

/// Equality of the ideals generated by x and y (compared through reduced
/// grevlex bases; both must be homogeneous under a positive grading).
bool same_ideal(const std::vector<Poly>& x, const std::vector<Poly>& y, std::size_t n);

/// Default power budget: 20 n, overridable through UMBRELLA_NMAX.
std::size_t default_power_budget(std::size_t n);

/// Whether ∏_{k∈S} ∂_k lies in the radical of I^L. Decided exactly by
/// saturating by the variables of S; a true answer is confirmed by finding N
/// with (∏ ∂_k)^N ≡ 0 and Error(kBudgetExceeded) is raised if none ≤ n_max.
bool radical_monomial_witness(const MarkedGroebnerBasis& gb, const ToricMatrix& a, const IndexSet& s,
                              std::size_t n_max = 0);

struct FacetCheck {
  IndexSet facet;
  bool passed = false;
  std::string detail;
};

struct RadicalCheck {
  IndexSet s;
  bool predicted_nilpotent = false;  // S lies in no facet
  bool observed_nilpotent = false;
  /// No decision within the power budget; counts as not passed.
  bool budget_exceeded = false;
  bool passed = false;
};

struct VerificationReport {
  std::vector<FacetCheck> facet_checks;
  std::vector<RadicalCheck> radical_checks;
  bool passed() const;
  bool budget_exceeded() const;
};

/// (i) every generator of gb, with the variables off a facet set to zero,
/// lies in that facet's toric ideal; (ii) nilpotency of ∏_{k∈S} ∂_k agrees
/// with "S lies in no facet" for all 1 <= |S| <= 3.
VerificationReport verify_components(const MarkedGroebnerBasis& gb, const Umbrella& umb, const ToricMatrix& a,
                                     std::size_t n_max = 0);

}  // namespace umbrella
