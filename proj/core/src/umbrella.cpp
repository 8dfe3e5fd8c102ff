#include "umbrella/umbrella.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "umbrella/errors.hpp"
#include "umbrella/polyhedral.hpp"

namespace umbrella {

namespace {

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

Rational dot(const QVector& h, const ZVector& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += h[i] * a[i];
  return s;
}

bool face_less(const Face& x, const Face& y) {
  if (x.dim != y.dim) return x.dim < y.dim;
  return x.members < y.members;
}

}  // namespace

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k] + 1);
  }
  return out + "}";
}

ToricMatrix::ToricMatrix(IntMatrix a, LatticePolicy policy) : a_(std::move(a)) {
  if (a_.rows() == 0 || a_.cols() == 0)
    throw ValidationError("bad-dimensions", "A must have at least one row and one column");
  for (std::size_t j = 0; j < a_.cols(); ++j) {
    columns_.push_back(a_.column(j));
    bool zero = std::all_of(columns_.back().begin(), columns_.back().end(),
                            [](const Integer& x) { return x == 0; });
    if (zero) throw ValidationError("zero-column", "column " + std::to_string(j + 1) + " of A is zero");
  }
  if (rank(a_) != a_.rows())
    throw ValidationError("rank-deficient", "A must have rank equal to its number of rows");

  // h . a_j >= 1 for all j is feasible iff the cone over the columns is pointed
  // and avoids the origin.
  LPProblem lp;
  lp.variables = d();
  for (const auto& col : columns_) {
    QVector row;
    for (const auto& x : col) row.push_back(Rational(-x));
    lp.add(std::move(row), Relation::kLessEqual, -1);
  }
  auto h = lp_feasible_with_witness(lp);
  if (!h) throw ValidationError("not-pointed", "the semigroup generated by the columns of A is not pointed");
  witness_ = *h;

  Integer denom = 1;
  for (const auto& x : witness_) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  ZVector g;
  for (const auto& x : witness_) g.push_back(Integer(x.get_num() * (denom / x.get_den())));
  for (const auto& col : columns_) {
    Integer s = 0;
    for (std::size_t i = 0; i < col.size(); ++i) s += g[i] * col[i];
    grading_.push_back(s);
  }

  const auto divisors = snf(a_);
  for (const auto& e : divisors) lattice_full_ = lattice_full_ && e == 1;
  if (!lattice_full_ && policy == LatticePolicy::kRequireFull)
    throw ValidationError("lattice-not-full", "the columns of A do not generate Z^d");
}

std::vector<ZVector> ToricMatrix::columns(const IndexSet& tau) const {
  std::vector<ZVector> out;
  for (auto j : tau) out.push_back(columns_.at(j));
  return out;
}

WeightVector WeightVector::scaled(const Rational& c) const {
  QVector v = values_;
  for (auto& x : v) x *= c;
  return WeightVector(std::move(v));
}

WeightVector parse_weights(const std::string& text) {
  QVector values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    values.push_back(parse_rational(item));
  }
  if (values.empty()) throw ValidationError("bad-rational", "empty weight list");
  return WeightVector(std::move(values));
}

std::string format_weights(const WeightVector& w) {
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) out += ",";
    out += to_string(w[j]);
  }
  return out;
}

std::string Face::dim_label() const { return dim < 0 ? "empty" : std::to_string(dim); }

Umbrella::Umbrella(std::size_t d, std::vector<Face> faces) : d_(d), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), face_less);
}

std::vector<Face> Umbrella::by_dim(int k) const {
  std::vector<Face> out;
  for (const auto& f : faces_)
    if (f.dim == k) out.push_back(f);
  return out;
}

std::vector<IndexSet> Umbrella::face_sets() const {
  std::vector<IndexSet> out;
  for (const auto& f : faces_) out.push_back(f.members);
  return out;
}

std::vector<IndexSet> Umbrella::facet_sets() const {
  std::vector<IndexSet> out;
  for (const auto& f : faces_)
    if (f.dim == static_cast<int>(d_) - 1) out.push_back(f.members);
  return out;
}

const Face* Umbrella::find(const IndexSet& tau) const {
  for (const auto& f : faces_)
    if (f.members == tau) return &f;
  return nullptr;
}

bool Umbrella::contains(const IndexSet& tau) const { return find(tau) != nullptr; }

bool Umbrella::is_facet(const IndexSet& tau) const {
  const Face* f = find(tau);
  return f && f->dim == static_cast<int>(d_) - 1;
}

std::vector<IndexSet> Umbrella::facets_containing(const IndexSet& tau) const {
  std::vector<IndexSet> out;
  for (const auto& f : facet_sets())
    if (is_subset(tau, f)) out.push_back(f);
  return out;
}

FaceTest is_face(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau) {
  if (l.size() != a.n()) throw ValidationError("weight-length", "weight vector length differs from n");
  LPProblem lp;
  lp.variables = a.d();
  std::size_t k = 0;
  for (std::size_t j = 0; j < a.n(); ++j) {
    const bool member = k < tau.size() && tau[k] == j;
    if (member) ++k;
    lp.add(to_rational(a.column(j)), member ? Relation::kEqual : Relation::kStrictLess, l[j]);
  }
  if (k != tau.size()) throw std::invalid_argument("index set out of range or unsorted");
  auto h = lp_feasible_with_witness(lp);
  if (!h) return {};
  return {true, std::move(*h)};
}

std::vector<IndexSet> cone_faces(const std::vector<ZVector>& generators) {
  const std::size_t m = generators.size();
  IndexSet all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  std::vector<QVector> gens;
  for (const auto& g : generators) gens.push_back(to_rational(g));
  const std::size_t r = rank(gens);
  const std::size_t ambient = gens.empty() ? 0 : gens.front().size();

  // Facets of the cone inside its own span: rank r-1 subsets with a linear
  // functional vanishing on them, nonpositive on the rest, and vanishing
  // nowhere else on the span.
  std::set<IndexSet> faces{all};
  if (r == 0) return {all};
  const auto complement = rational_kernel(gens, ambient);
  std::set<IndexSet> facets;
  for_each_subset(m, r - 1, [&](const IndexSet& subset) {
    std::vector<QVector> rows;
    for (auto i : subset) rows.push_back(gens[i]);
    if (rank(rows) != r - 1) return;
    // Functionals vanishing on the subset, modulo those vanishing on the span:
    // stacking the span complement picks a representative.
    for (const auto& c : complement) rows.push_back(c);
    const auto kernel = rational_kernel(rows, ambient);
    if (kernel.size() != 1) return;
    const QVector& y = kernel.front();
    bool neg = false, pos = false;
    IndexSet members;
    for (std::size_t i = 0; i < m; ++i) {
      Rational v = 0;
      for (std::size_t c = 0; c < ambient; ++c) v += y[c] * gens[i][c];
      if (v < 0) neg = true;
      else if (v > 0) pos = true;
      else members.push_back(i);
    }
    if (neg && pos) return;
    facets.insert(members);
  });

  std::vector<IndexSet> frontier(facets.begin(), facets.end());
  faces.insert(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& f : frontier)
      for (const auto& g : facets) {
        IndexSet meet = set_intersection(f, g);
        if (faces.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }
  faces.insert(IndexSet{});
  return {faces.begin(), faces.end()};
}

std::size_t span_dim(const ToricMatrix& a, const IndexSet& tau) {
  std::vector<QVector> vs;
  for (auto j : tau) vs.push_back(to_rational(a.column(j)));
  return rank(vs);
}

Umbrella compute_umbrella(const ToricMatrix& a, const WeightVector& l, const UmbrellaOptions& options) {
  if (l.size() != a.n()) throw ValidationError("weight-length", "weight vector length differs from n");
  const std::size_t d = a.d(), n = a.n();
  std::vector<QVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(to_rational(a.column(j)));

  // Facets are the equality sets of the vertices of {h : h . a_i <= L_i}.
  std::map<IndexSet, QVector> facets;
  for_each_subset(n, d, [&](const IndexSet& subset) {
    std::vector<QVector> rows;
    QVector rhs;
    for (auto j : subset) {
      rows.push_back(cols[j]);
      rhs.push_back(l[j]);
    }
    auto h = solve_square(rows, rhs);
    if (!h) return;
    IndexSet members;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational v = dot(*h, a.column(i));
      if (v > l[i]) return;
      if (v == l[i]) members.push_back(i);
    }
    facets.emplace(std::move(members), std::move(*h));
  });

  std::map<IndexSet, QVector> faces;
  for (const auto& [facet, h] : facets) {
    faces[facet] = h;
    for (const auto& local : cone_faces(a.columns(facet))) {
      IndexSet global;
      for (auto k : local) global.push_back(facet[k]);
      faces.emplace(std::move(global), QVector{});
    }
  }
  // -t h0 is always feasible and the polyhedron is pointed, so a vertex exists.
  if (facets.empty()) throw Error(ErrorKind::kInternalConsistency, "no facets found");

  std::vector<Face> out;
  for (auto& [members, witness] : faces) {
    Face f;
    f.members = members;
    f.dim = static_cast<int>(span_dim(a, members)) - 1;
    if (options.witnesses && witness.empty()) {
      FaceTest t = is_face(a, l, members);
      if (!t.is_face)
        throw Error(ErrorKind::kInternalConsistency,
                    "enumerated face " + format_index_set(members) + " has no supporting functional");
      witness = std::move(t.witness);
    }
    f.witness = witness;
    out.push_back(std::move(f));
  }
  return Umbrella(d, std::move(out));
}

Umbrella zero_umbrella(const ToricMatrix& a) { return compute_umbrella(a, WeightVector::zero(a.n())); }

bool is_pyramid(const ToricMatrix& a, const IndexSet& tau, std::size_t i) {
  if (!std::binary_search(tau.begin(), tau.end(), i)) throw std::invalid_argument("apex not in tau");
  return span_dim(a, set_difference(tau, {i})) < span_dim(a, tau);
}

bool is_L_homogeneous(const ToricMatrix& a, const WeightVector& l) {
  if (l.size() != a.n()) throw ValidationError("weight-length", "weight vector length differs from n");
  LPProblem lp;
  lp.variables = a.d();
  for (std::size_t j = 0; j < a.n(); ++j) lp.add(to_rational(a.column(j)), Relation::kEqual, l[j]);
  return lp_feasible_with_witness(lp).has_value();
}

}  // namespace umbrella
