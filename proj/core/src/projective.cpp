#include "umbrella/projective.hpp"

#include <algorithm>

#include "umbrella/errors.hpp"

namespace umbrella {

WeightVector chart_weights(const SlopeFamily& fam, const ChartSpec& chart, const Rational& s) {
  IndexSet inverted = chart.inverted;
  std::sort(inverted.begin(), inverted.end());
  if (!is_subset(fam.vinf(), inverted) || !set_intersection(fam.v0(), inverted).empty())
    throw Error(ErrorKind::kChartMissesY, "the chart " + format_index_set(inverted) + " does not meet Y");
  return fam.weights(s);
}

std::vector<BarFace> bar_umbrella(const ToricMatrix& a, const WeightVector& l) {
  const Umbrella umb = compute_umbrella(a, l, {.witnesses = false});
  IndexSet all(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) all[j] = j;
  std::vector<BarFace> out;
  for (const auto& tau : umb.face_sets()) {
    const IndexSet rest = set_difference(all, tau);
    for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
      IndexSet t;
      for (std::size_t b = 0; b < rest.size(); ++b)
        if (mask >> b & 1) t.push_back(rest[b]);
      out.emplace_back(tau, std::move(t));
    }
  }
  return out;
}

bool bar_le(const BarFace& lower, const BarFace& upper) {
  const auto& [tau_l, t_l] = lower;
  const auto& [tau_u, t_u] = upper;
  return is_subset(tau_l, tau_u) && is_subset(set_difference(tau_u, tau_l), t_l) && is_subset(t_u, t_l);
}

InfinityReport slopes_at_infinity(const ToricMatrix& a, const IndexSet& v0, const IndexSet& vinf,
                                  const SlopeOptions& options) {
  const SlopeFamily fam(a, v0, vinf);
  chart_weights(fam, ChartSpec{fam.vinf()}, 0);
  InfinityReport out;
  out.umbrella_jumps = slopes_along(fam, options);
  out.filtered = filter_pyramids(out.umbrella_jumps, fam);
  out.conjectural = !fam.vinf().empty();
  out.umbrella_jumps.conjectural = out.conjectural;
  return out;
}

}  // namespace umbrella
