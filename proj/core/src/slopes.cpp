#include "umbrella/slopes.hpp"

#include <algorithm>

#include "umbrella/errors.hpp"

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

void check_indices(const IndexSet& s, std::size_t n) {
  for (auto j : s)
    if (j >= n) throw ValidationError("index-out-of-range", "index " + std::to_string(j + 1) + " exceeds n");
}

IndexSet normalized(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}


}  // namespace

SlopeFamily::SlopeFamily(ToricMatrix a, IndexSet v0, IndexSet vinf)
    : a_(std::move(a)), v0_(normalized(std::move(v0))), vinf_(normalized(std::move(vinf))),
      v_(a_.n(), 0) {
  check_indices(v0_, a_.n());
  check_indices(vinf_, a_.n());
  if (!set_intersection(v0_, vinf_).empty())
    throw ValidationError("v-overlap", "the zero and infinity index sets must be disjoint");
  for (auto j : v0_) v_[j] = 1;
  for (auto j : vinf_) v_[j] = -1;
}

WeightVector SlopeFamily::weights(const Rational& s) const {
  QVector w(a_.n());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = 1 + s * v_[j];
  return WeightVector(std::move(w));
}

std::vector<Rational> SlopeReport::critical_params() const {
  std::vector<Rational> out;
  for (const auto& c : critical) out.push_back(c.s);
  return out;
}

std::vector<Rational> SlopeReport::slopes() const {
  std::vector<Rational> out;
  for (const auto& c : critical) out.push_back(c.slope);
  return out;
}

std::vector<Rational> candidate_critical_values(const SlopeFamily& fam) {
  const ToricMatrix& a = fam.matrix();
  const std::size_t d = a.d(), n = a.n();
  std::vector<Rational> roots;
  for_each_subset(n, d, [&](const IndexSet& tau) {
    std::vector<QVector> rows;
    QVector ones, incr;
    for (auto j : tau) {
      rows.push_back(to_rational(a.column(j)));
      ones.push_back(1);
      incr.push_back(fam.increment(j));
    }
    auto h0 = solve_square(rows, ones);
    if (!h0) return;
    auto h1 = solve_square(rows, incr);
    // a_i . (h0 + s h1) = 1 + s v_i
    for (std::size_t i = 0; i < n; ++i) {
      if (std::binary_search(tau.begin(), tau.end(), i)) continue;
      const Rational alpha = dot(*h0, a.column(i)) - 1;
      const Rational beta = dot(*h1, a.column(i)) - fam.increment(i);
      if (beta == 0) continue;
      const Rational root = -alpha / beta;
      if (root > 0) roots.push_back(root);
    }
  });
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

bool differ(const Umbrella& x, const Umbrella& y, bool facets_only) {
  return facets_only ? x.facet_sets() != y.facet_sets() : x.face_sets() != y.face_sets();
}

Umbrella sweep_umbrella(const SlopeFamily& fam, const Rational& s) {
  return compute_umbrella(fam.matrix(), fam.weights(s), {.witnesses = false});
}

}  // namespace

SlopeReport slopes_along(const SlopeFamily& fam, const SlopeOptions& options) {
  SlopeReport report;
  report.candidates = candidate_critical_values(fam);
  report.at_zero = sweep_umbrella(fam, 0);
  const auto& c = report.candidates;

  const std::size_t k = c.size();
  for (std::size_t i = 0; i <= k; ++i) {
    SlopeInterval iv;
    iv.lo = i == 0 ? Rational(0) : c[i - 1];
    if (i < k) iv.hi = c[i];
    iv.sample = iv.hi ? Rational((iv.lo + *iv.hi) / 2) : Rational(iv.lo + 1);
    iv.umbrella = sweep_umbrella(fam, iv.sample);
    for (std::size_t t = 1; t <= options.spot_checks; ++t) {
      const Rational frac(static_cast<long>(t), static_cast<long>(options.spot_checks + 1));
      const Rational s = iv.hi ? Rational(iv.lo + (*iv.hi - iv.lo) * frac) : Rational(iv.lo + 2 * frac);
      if (differ(sweep_umbrella(fam, s), iv.umbrella, false))
        throw Error(ErrorKind::kInternalConsistency,
                    "umbrella changes inside the interval starting at " + to_string(iv.lo));
    }
    report.intervals.push_back(std::move(iv));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!differ(report.intervals[i].umbrella, report.intervals[i + 1].umbrella, options.facets_only))
      continue;
    report.critical.push_back({c[i], 1 / c[i], sweep_umbrella(fam, c[i]), i});
  }
  return report;
}

std::vector<IndexSet> pyramid_filtered_faces(const ToricMatrix& a, const Umbrella& umb,
                                             const IndexSet& vinf) {
  std::vector<IndexSet> out;
  for (const auto& tau : umb.face_sets()) {
    bool pyramid = false;
    for (auto i : set_intersection(tau, vinf)) pyramid = pyramid || is_pyramid(a, tau, i);
    if (!pyramid) out.push_back(tau);
  }
  return out;
}

SlopeReport filter_pyramids(const SlopeReport& report, const SlopeFamily& fam) {
  if (fam.vinf().empty()) return report;
  SlopeReport out = report;
  out.pyramid_filtered = true;
  out.conjectural = true;
  out.critical.clear();
  const auto& iv = report.intervals;
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
    const auto left = pyramid_filtered_faces(fam.matrix(), iv[i].umbrella, fam.vinf());
    const auto right = pyramid_filtered_faces(fam.matrix(), iv[i + 1].umbrella, fam.vinf());
    if (left == right) continue;
    const Rational s = *iv[i].hi;
    out.critical.push_back({s, 1 / s, sweep_umbrella(fam, s), i});
  }
  return out;
}

}  // namespace umbrella
