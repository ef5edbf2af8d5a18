#pragma once

#include <span>
#include <string>

#include "betbench/metrics.hpp"

namespace betbench {

/// One line per row with counts, baseline, theta and formatted p-value.
std::string render_rows(std::span<const EvalSummary> rows);

/// Pivot: one row per scorer, one column per (dataset, metric); cells read
/// "43 (.026)" with a section mark when p <= 0.05.
std::string render_pivot(std::span<const EvalSummary> rows);

}  // namespace betbench
