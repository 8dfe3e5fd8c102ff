#include "umbrella/errors.hpp"

namespace umbrella {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotSublattice: return "not-sublattice";
    case ErrorKind::kNonFreeQuotient: return "non-free-quotient";
    case ErrorKind::kNotContained: return "not-contained";
    case ErrorKind::kNotAFacet: return "not-a-facet";
    case ErrorKind::kNotAFace: return "not-a-face";
    case ErrorKind::kChartMissesY: return "chart-misses-y";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kInternalConsistency: return "internal-consistency";
    case ErrorKind::kValidation: return "validation";
  }
  return "unknown";
}

}  // namespace umbrella
