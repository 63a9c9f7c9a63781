#pragma once

#include <optional>

#include "kmsph/linalg.hpp"

namespace kmsph {

enum class Sense { le, eq, ge };

// Find x with row_k . x {<=,=,>=} rhs_k for every k, x_j >= 0 where marked.
// Solved by an exact rational phase-1 simplex; pivoting tie-breaks by lowest
// index (Bland's rule), so the result is deterministic.
struct FeasibilityProblem {
  int num_vars = 0;
  QMat rows;
  std::vector<Sense> senses;
  QVec rhs;
  std::vector<bool> nonneg;  // size num_vars
};

std::optional<QVec> feasible_point(const FeasibilityProblem& problem);

// c >= 0 with (c^T m)_j >= 1 for every column j of m (rows are generators).
// Empty generator list with at least one column is infeasible.
std::optional<QVec> strict_feasibility(const QMat& m, int num_cols);

}  // namespace kmsph
