#pragma once

#include <map>
#include <utility>

#include "umbrella/umbrella.hpp"

namespace umbrella {

/// [Z^d : Z tau] for a facet tau of `umb`; throws Error(kNotAFacet) otherwise.
Integer nu(const ToricMatrix& a, const Umbrella& umb, const IndexSet& tau);
Integer nu(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau);

/// Multiplicity of the conormal component indexed by the face tau, summed
/// facet by facet: [Z^d : Z tau'] * [(Z tau' ∩ Q tau) : Z tau] *
/// vol(conv(π(tau' ∪ {0})) \ conv(π(tau' \ tau))), where π is the quotient by
/// the saturation of Z tau inside Z tau'.
/// Throws Error(kNotAFace) if tau is not a face of `umb`.
Integer mu(const ToricMatrix& a, const Umbrella& umb, const IndexSet& tau);
Integer mu(const ToricMatrix& a, const WeightVector& l, const IndexSet& tau);

/// One facet's contribution to mu(tau); exposed for tests and the CLI trace.
Integer mu_contribution(const ToricMatrix& a, const IndexSet& tau, const IndexSet& facet);

/// mu(A, F, ∅), which equals vol(conv(0, a_1, ..., a_n)).
Integer rank_volume(const ToricMatrix& a);

struct CharCycle {
  WeightVector weight;
  std::map<IndexSet, Integer> mu;  // keyed by face, every value positive
  std::map<IndexSet, Integer> nu;  // facets only

  /// Sum of nu over facets.
  Integer degree() const;
};

CharCycle char_cycle(const ToricMatrix& a, const WeightVector& l);

/// Pairs (tau, T) with tau a face and T a subset of the complement of tau.
using BarFace = std::pair<IndexSet, IndexSet>;

struct BarCharCycle {
  WeightVector weight;
  std::map<BarFace, Integer> mu;  // mu(tau, T) = 2^{|T|} mu(tau)
};

BarCharCycle bar_char_cycle(const ToricMatrix& a, const WeightVector& l);

}  // namespace umbrella
