#pragma once

#include <cstdint>
#include <string>

namespace umbrella::oracles {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Each runs `cases` random instances with d <= 3, n <= 6, entries <= 9.
PropertyResult check_scaling_invariance(std::size_t cases, std::uint64_t seed);
PropertyResult check_face_closure(std::size_t cases, std::uint64_t seed);
PropertyResult check_square_facets(std::size_t cases, std::uint64_t seed);
PropertyResult check_unimodular_invariance(std::size_t cases, std::uint64_t seed);
PropertyResult check_rank_volume_shoelace(std::size_t cases, std::uint64_t seed);
PropertyResult check_homogeneity_vs_slopes(std::size_t cases, std::uint64_t seed);

}  // namespace umbrella::oracles
