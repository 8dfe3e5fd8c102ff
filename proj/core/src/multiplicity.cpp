#include "umbrella/multiplicity.hpp"

#include "umbrella/errors.hpp"
#include "umbrella/polyhedral.hpp"

namespace umbrella {

namespace {

Integer finite_index(const LatticeBasis& sub, const LatticeBasis& super) {
  const LatticeIndex idx = lattice_index(sub, super);
  if (!idx.is_finite())
    throw Error(ErrorKind::kInternalConsistency, "expected a full-rank sublattice");
  return idx.value;
}

Integer as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw Error(ErrorKind::kInternalConsistency, std::string(what) + " is not integral");
  return q.get_num();
}

}  // namespace

Integer nu(const ToricMatrix& a, const Umbrella& umb, const IndexSet& tau) {
  if (!umb.is_facet(tau))
    throw Error(ErrorKind::kNotAFacet, format_index_set(tau) + " is not a facet of the umbrella");
  return finite_index(LatticeBasis(a.d(), a.columns(tau)), LatticeBasis::standard(a.d()));
}

Integer nu(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau) {
  return nu(a, compute_umbrella(a, l, {.witnesses = false}), tau);
}

Integer mu_contribution(const ToricMatrix& a, const IndexSet& tau, const IndexSet& facet) {
  const LatticeBasis facet_lattice(a.d(), a.columns(facet));
  const LatticeBasis face_lattice(a.d(), a.columns(tau));
  const LatticeBasis saturated = saturation(face_lattice, facet_lattice);

  const Integer outer = finite_index(facet_lattice, LatticeBasis::standard(a.d()));
  const Integer inner = finite_index(face_lattice, saturated);

  const QuotientMap pi = quotient_coordinates(facet_lattice, saturated);
  const std::size_t k = pi.target_rank();
  std::vector<ZVector> p_points{ZVector(k, Integer(0))};
  std::vector<ZVector> q_points;
  const IndexSet rest = set_difference(facet, tau);
  for (auto j : facet) p_points.push_back(pi.apply(a.column(j)));
  for (auto j : rest) q_points.push_back(pi.apply(a.column(j)));
  const Rational vol = volume_difference(Polytope::from_integer_points(k, p_points),
                                         Polytope::from_integer_points(k, q_points));
  return outer * inner * as_integer(vol, "normalized volume");
}

Integer mu(const ToricMatrix& a, const Umbrella& umb, const IndexSet& tau) {
  if (!umb.contains(tau))
    throw Error(ErrorKind::kNotAFace, format_index_set(tau) + " is not a face of the umbrella");
  Integer total = 0;
  for (const auto& facet : umb.facets_containing(tau)) total += mu_contribution(a, tau, facet);
  return total;
}

Integer mu(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau) {
  return mu(a, compute_umbrella(a, l, {.witnesses = false}), tau);
}

Integer rank_volume(const ToricMatrix& a) {
  return mu(a, WeightVector::order_filtration(a.n()), IndexSet{});
}

Integer CharCycle::degree() const {
  Integer s = 0;
  for (const auto& [tau, v] : nu) s += v;
  return s;
}

CharCycle char_cycle(const ToricMatrix& a, const WeightVector& l) {
  const Umbrella umb = compute_umbrella(a, l, {.witnesses = false});
  CharCycle cycle;
  cycle.weight = l;
  for (const auto& face : umb.faces()) {
    Integer m = mu(a, umb, face.members);
    if (m <= 0)
      throw Error(ErrorKind::kInternalConsistency,
                  "non-positive multiplicity at " + format_index_set(face.members));
    cycle.mu.emplace(face.members, std::move(m));
  }
  for (const auto& facet : umb.facet_sets()) cycle.nu.emplace(facet, nu(a, umb, facet));
  return cycle;
}

BarCharCycle bar_char_cycle(const ToricMatrix& a, const WeightVector& l) {
  const CharCycle base = char_cycle(a, l);
  BarCharCycle out;
  out.weight = l;
  for (const auto& [tau, m] : base.mu) {
    IndexSet all(a.n());
    for (std::size_t j = 0; j < a.n(); ++j) all[j] = j;
    const IndexSet rest = set_difference(all, tau);
    for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
      IndexSet t;
      for (std::size_t b = 0; b < rest.size(); ++b)
        if (mask >> b & 1) t.push_back(rest[b]);
      Integer v = m;
      v <<= static_cast<mp_bitcnt_t>(t.size());
      out.mu.emplace(BarFace{tau, std::move(t)}, std::move(v));
    }
  }
  return out;
}

}  // namespace umbrella
