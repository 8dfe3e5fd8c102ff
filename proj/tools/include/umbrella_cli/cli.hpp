#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "umbrella/umbrella.hpp"

namespace umbrella::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kValidation = 2, kInternal = 3, kBudget = 4 };

/// Runs one subcommand. Reports go to `out` (or --out), diagnostics to `err`
/// as a one-line JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG rendering of a d = 2 umbrella. Throws ValidationError("plot-needs-d2").
std::string render_svg(const ToricMatrix& a, const WeightVector& l, const Umbrella& umb);

}  // namespace umbrella::cli
