#include "umbrella/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <utility>

#include "umbrella/errors.hpp"

namespace umbrella {

// --- monomials ---------------------------------------------------------------

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += other.exps[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] -= divisor.exps[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] = std::max(exps[i], other.exps[i]);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0 && other.exps[i] > 0) return false;
  return true;
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "d" + std::to_string(i + 1);
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

Binomial Binomial::from_kernel_vector(const ZVector& u) {
  Binomial b{Monomial::one(u.size()), Monomial::one(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].fits_slong_p()) throw std::overflow_error("kernel vector entry too large");
    const long e = u[i].get_si();
    if (e > 0) b.plus.exps[i] = e;
    else b.minus.exps[i] = -e;
  }
  return b;
}

ZVector Binomial::exponent_difference() const {
  ZVector u(plus.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = plus.exps[i] - minus.exps[i];
  return u;
}

// --- term orders -------------------------------------------------------------

namespace {

std::vector<Integer> unit_row(std::size_t n, std::size_t j, long value) {
  std::vector<Integer> row(n, Integer(0));
  row[j] = value;
  return row;
}

}  // namespace

TermOrder TermOrder::weighted(const WeightVector& l, TieBreak tie) {
  const std::size_t n = l.size();
  Integer denom = 1;
  for (const auto& x : l.values()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<Integer>> rows;
  std::vector<Integer> first;
  for (const auto& x : l.values()) first.push_back(Integer(x.get_num() * (denom / x.get_den())));
  rows.push_back(std::move(first));
  if (tie == TieBreak::kGrevlex) {
    rows.emplace_back(n, Integer(1));
    for (std::size_t k = n; k-- > 1;) rows.push_back(unit_row(n, k, -1));
  }
  return TermOrder(std::move(rows));
}

TermOrder TermOrder::graded_revlex_last(const ZVector& grading, std::size_t j) {
  const std::size_t n = grading.size();
  std::vector<std::vector<Integer>> rows{grading, unit_row(n, j, -1)};
  for (std::size_t k = n; k-- > 0;)
    if (k != j) rows.push_back(unit_row(n, k, -1));
  return TermOrder(std::move(rows));
}

int TermOrder::compare(const Monomial& x, const Monomial& y) const {
  for (const auto& row : rows_) {
    Integer s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0 && x.exps[i] != y.exps[i]) s += row[i] * (x.exps[i] - y.exps[i]);
    if (s != 0) return s > 0 ? 1 : -1;
  }
  for (std::size_t i = 0; i < x.exps.size(); ++i)
    if (x.exps[i] != y.exps[i]) return x.exps[i] > y.exps[i] ? 1 : -1;
  return 0;
}

// --- polynomials -------------------------------------------------------------

std::string format_poly(const Poly& p) {
  return p.tail ? format_monomial(p.lead) + " - " + format_monomial(*p.tail) : format_monomial(p.lead);
}

std::optional<Poly> make_poly(const Monomial& x, const std::optional<Monomial>& y, const TermOrder& order) {
  if (!y) return Poly{x, std::nullopt};
  const int c = order.compare(x, *y);
  if (c == 0) return std::nullopt;
  return c > 0 ? Poly{x, y} : Poly{*y, x};
}

std::optional<Monomial> normal_form(const Monomial& m, const std::vector<Poly>& basis, const TermOrder& order) {
  (void)order;
  Monomial cur = m;
  while (true) {
    const Poly* hit = nullptr;
    for (const auto& g : basis)
      if (g.lead.divides(cur)) {
        hit = &g;
        break;
      }
    if (!hit) return cur;
    if (!hit->tail) return std::nullopt;
    cur = cur / hit->lead * *hit->tail;
  }
}

std::optional<Poly> normal_form(const Poly& f, const std::vector<Poly>& basis, const TermOrder& order) {
  std::optional<Poly> cur = f;
  while (cur) {
    const Poly* hit = nullptr;
    for (const auto& g : basis)
      if (g.lead.divides(cur->lead)) {
        hit = &g;
        break;
      }
    if (!hit) break;
    if (!hit->tail) {
      // lead vanishes, leaving -tail
      if (!cur->tail) return std::nullopt;
      cur = Poly{*cur->tail, std::nullopt};
    } else {
      cur = make_poly(cur->lead / hit->lead * *hit->tail, cur->tail, order);
    }
  }
  if (!cur) return std::nullopt;
  if (cur->tail) {
    auto t = normal_form(*cur->tail, basis, order);
    cur->tail = t;
  }
  return cur;
}

namespace {

std::optional<Poly> s_poly(const Poly& f, const Poly& g, const TermOrder& order) {
  const Monomial m = f.lead.lcm(g.lead);
  std::optional<Monomial> a, b;
  if (f.tail) a = m / f.lead * *f.tail;
  if (g.tail) b = m / g.lead * *g.tail;
  if (!a && !b) return std::nullopt;
  if (!a) return Poly{*b, std::nullopt};
  if (!b) return Poly{*a, std::nullopt};
  return make_poly(*b, a, order);
}

std::vector<Poly> interreduce(std::vector<Poly> g, const TermOrder& order) {
  for (const auto& p : g)
    if (p.lead.is_one()) return {Poly{p.lead, std::nullopt}};
  // Keep only elements whose lead is minimal; among equal leads keep the first.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lead.divides(g[i].lead)) continue;
      redundant = g[j].lead != g[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Poly p = minimal[i];
    if (p.tail) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      p.tail = normal_form(*p.tail, others, order);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& x, const Poly& y) { return order.greater(y.lead, x.lead); });
  return out;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order) {
  std::vector<Poly> g;
  for (const auto& p : gens) {
    auto oriented = make_poly(p.lead, p.tail, order);
    if (!oriented) continue;
    auto r = normal_form(*oriented, g, order);
    if (r) g.push_back(std::move(*r));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (g[i].lead.coprime(g[j].lead)) continue;
    auto s = s_poly(g[i], g[j], order);
    if (!s) continue;
    auto r = normal_form(*s, g, order);
    if (!r) continue;
    if (r->lead.is_one()) return {Poly{r->lead, std::nullopt}};
    g.push_back(std::move(*r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return interreduce(std::move(g), order);
}

std::vector<Poly> saturate_variable(const std::vector<Poly>& gens, std::size_t j, const ZVector& grading) {
  const TermOrder order = TermOrder::graded_revlex_last(grading, j);
  std::vector<Poly> out;
  for (auto p : groebner_basis(gens, order)) {
    long k = p.lead.exps[j];
    if (p.tail) k = std::min(k, p.tail->exps[j]);
    p.lead.exps[j] -= k;
    if (p.tail) p.tail->exps[j] -= k;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poly> toric_ideal_basis(const IntMatrix& a, const ZVector& grading) {
  const std::size_t n = a.cols();
  const TermOrder grevlex = TermOrder::grevlex(n);
  std::vector<Poly> gens;
  const LatticeBasis kernel = integer_kernel(a);
  for (const auto& u : kernel.basis()) {
    const Binomial b = Binomial::from_kernel_vector(u);
    if (auto p = make_poly(b.plus, b.minus, grevlex)) gens.push_back(*p);
  }
  if (gens.empty()) return {};
  for (std::size_t j = 0; j < n; ++j) gens = saturate_variable(gens, j, grading);
  return groebner_basis(gens, grevlex);
}

std::vector<Binomial> toric_ideal(const ToricMatrix& a) {
  std::vector<Binomial> out;
  for (const auto& p : toric_ideal_basis(a.matrix(), a.positive_grading())) {
    if (!p.tail) throw Error(ErrorKind::kInternalConsistency, "toric ideal contains a monomial");
    out.push_back({p.lead, *p.tail});
  }
  return out;
}

// --- initial ideals ----------------------------------------------------------

std::vector<Poly> MarkedGroebnerBasis::leading_forms() const {
  std::vector<Poly> out;
  for (const auto& e : elements) out.push_back(e.leading_form);
  return out;
}

TermOrder MarkedGroebnerBasis::tie_order() const {
  return TermOrder::weighted(WeightVector::zero(weight.size()), tie);
}

namespace {

Rational weight_of(const WeightVector& l, const Monomial& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.exps[i]) s += l[i] * m.exps[i];
  return s;
}

std::vector<Poly> as_polys(const std::vector<Binomial>& gens) {
  std::vector<Poly> out;
  for (const auto& b : gens) out.push_back({b.plus, b.minus});
  return out;
}

}  // namespace

MarkedGroebnerBasis initial_ideal(const std::vector<Binomial>& gens, const WeightVector& l,
                                  TermOrder::TieBreak tie) {
  MarkedGroebnerBasis gb;
  gb.weight = l;
  gb.tie = tie;
  for (auto& p : groebner_basis(as_polys(gens), TermOrder::weighted(l, tie))) {
    Poly form = p;
    if (p.tail && weight_of(l, p.lead) != weight_of(l, *p.tail)) form.tail.reset();
    gb.elements.push_back({std::move(p), std::move(form)});
  }
  return gb;
}

std::vector<Poly> initial_ideal_homogenized(const std::vector<Binomial>& gens, const WeightVector& l) {
  const std::size_t n = l.size();
  Integer denom = 1;
  for (const auto& x : l.values()) {
    if (x <= 0) throw std::invalid_argument("homogenization route needs positive weights");
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  }
  ZVector w;
  for (const auto& x : l.values()) w.push_back(Integer(x.get_num() * (denom / x.get_den())));
  ZVector grading = w;
  grading.push_back(1);

  auto degree = [&](const Monomial& m) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * m.exps[i];
    return s;
  };
  const TermOrder big = TermOrder::grevlex(n + 1);
  std::vector<Poly> hom;
  for (const auto& b : gens) {
    Monomial p = b.plus, m = b.minus;
    p.exps.push_back(0);
    m.exps.push_back(0);
    const Integer dp = degree(b.plus), dm = degree(b.minus);
    if (dp < dm) p.exps[n] = Integer(dm - dp).get_si();
    else m.exps[n] = Integer(dp - dm).get_si();
    if (auto q = make_poly(p, m, big)) hom.push_back(*q);
  }
  std::vector<Poly> saturated = saturate_variable(hom, n, grading);

  const TermOrder small = TermOrder::grevlex(n);
  std::vector<Poly> out;
  for (const auto& q : saturated) {
    std::optional<Monomial> x, y;
    if (q.lead.exps[n] == 0) x = Monomial(std::vector<long>(q.lead.exps.begin(), q.lead.exps.end() - 1));
    if (q.tail && q.tail->exps[n] == 0)
      y = Monomial(std::vector<long>(q.tail->exps.begin(), q.tail->exps.end() - 1));
    if (x && y) {
      if (auto r = make_poly(*x, y, small)) out.push_back(*r);
    } else if (x) {
      out.push_back({*x, std::nullopt});
    } else if (y) {
      out.push_back({*y, std::nullopt});
    }
  }
  return out;
}

bool same_ideal(const std::vector<Poly>& x, const std::vector<Poly>& y, std::size_t n) {
  const TermOrder order = TermOrder::grevlex(n);
  auto gx = groebner_basis(x, order), gy = groebner_basis(y, order);
  auto key = [](const Poly& a, const Poly& b) {
    if (a.lead != b.lead) return a.lead < b.lead;
    return a.tail < b.tail;
  };
  std::sort(gx.begin(), gx.end(), key);
  std::sort(gy.begin(), gy.end(), key);
  return gx == gy;
}

// --- radical and component checks -------------------------------------------

std::size_t default_power_budget(std::size_t n) {
  if (const char* env = std::getenv("UMBRELLA_NMAX")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20 * n;
}

bool radical_monomial_witness(const MarkedGroebnerBasis& gb, const ToricMatrix& a, const IndexSet& s,
                              std::size_t n_max) {
  const std::size_t n = a.n();
  if (n_max == 0) n_max = default_power_budget(n);
  const std::vector<Poly> forms = gb.leading_forms();

  std::vector<Poly> sat = forms;
  for (auto k : s) sat = saturate_variable(sat, k, a.positive_grading());
  const auto closed = groebner_basis(sat, TermOrder::grevlex(n));
  const bool member = std::any_of(closed.begin(), closed.end(), [](const Poly& p) { return p.lead.is_one(); });
  if (!member) return false;

  const TermOrder order = gb.tie_order();
  const auto basis = groebner_basis(forms, order);
  Monomial m = Monomial::one(n);
  for (auto k : s) m.exps[k] = 1;
  std::optional<Monomial> r = m;
  for (std::size_t power = 1; power <= n_max; ++power) {
    r = normal_form(*r, basis, order);
    if (!r) return true;
    *r = *r * m;
  }
  throw Error(ErrorKind::kBudgetExceeded, "no power of " + format_index_set(s) + " up to " +
                                              std::to_string(n_max) + " reduces to zero");
}

bool VerificationReport::passed() const {
  return std::all_of(facet_checks.begin(), facet_checks.end(), [](const FacetCheck& c) { return c.passed; }) &&
         std::all_of(radical_checks.begin(), radical_checks.end(), [](const RadicalCheck& c) { return c.passed; });
}

bool VerificationReport::budget_exceeded() const {
  return std::any_of(radical_checks.begin(), radical_checks.end(),
                     [](const RadicalCheck& c) { return c.budget_exceeded; });
}

namespace {

std::optional<Monomial> restrict_to(const Monomial& m, const IndexSet& tau) {
  std::vector<long> e;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const bool inside = k < tau.size() && tau[k] == i;
    if (inside) {
      e.push_back(m.exps[i]);
      ++k;
    } else if (m.exps[i] != 0) {
      return std::nullopt;
    }
  }
  return Monomial(std::move(e));
}

FacetCheck check_facet(const std::vector<Poly>& forms, const ToricMatrix& a, const IndexSet& tau) {
  FacetCheck check{tau, true, ""};
  ZVector grading;
  for (auto j : tau) grading.push_back(a.positive_grading()[j]);
  const auto local = toric_ideal_basis(a.matrix().select_columns(tau), grading);
  const TermOrder order = TermOrder::grevlex(tau.size());
  for (const auto& f : forms) {
    auto x = restrict_to(f.lead, tau);
    std::optional<Monomial> y;
    if (f.tail) y = restrict_to(*f.tail, tau);
    if (!x && !y) continue;
    std::optional<Poly> g;
    if (x && y) g = make_poly(*x, y, order);
    else g = Poly{x ? *x : *y, std::nullopt};
    if (g && normal_form(*g, local, order)) {
      check.passed = false;
      check.detail = format_poly(f) + " survives modulo the facet ideal";
      return check;
    }
  }
  return check;
}

}  // namespace

VerificationReport verify_components(const MarkedGroebnerBasis& gb, const Umbrella& umb, const ToricMatrix& a,
                                     std::size_t n_max) {
  VerificationReport report;
  const auto forms = gb.leading_forms();
  const auto facets = umb.facet_sets();
  for (const auto& tau : facets) report.facet_checks.push_back(check_facet(forms, a, tau));

  const std::size_t n = a.n();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) > 3) continue;
    IndexSet s;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) s.push_back(j);
    RadicalCheck c;
    c.s = s;
    c.predicted_nilpotent = std::none_of(facets.begin(), facets.end(),
                                         [&](const IndexSet& f) { return is_subset(s, f); });
    try {
      c.observed_nilpotent = radical_monomial_witness(gb, a, s, n_max);
      c.passed = c.observed_nilpotent == c.predicted_nilpotent;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded) throw;
      c.budget_exceeded = true;
      c.passed = false;
    }
    report.radical_checks.push_back(std::move(c));
  }
  std::sort(report.radical_checks.begin(), report.radical_checks.end(),
            [](const RadicalCheck& x, const RadicalCheck& y) {
              return x.s.size() != y.s.size() ? x.s.size() < y.s.size() : x.s < y.s;
            });
  return report;
}

}  // namespace umbrella
