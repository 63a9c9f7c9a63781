#pragma once

#include <optional>

#include "kmsph/rational.hpp"

namespace kmsph {

Rat dot(const QVec& a, const QVec& b);
QVec vec_add(QVec a, const QVec& b);
QVec vec_sub(QVec a, const QVec& b);
QVec vec_scale(const Rat& c, QVec a);
bool is_zero_vec(const QVec& a);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMat& m);
int rank_of(QMat m);
// Canonical basis (RREF rows) of the row span.
QMat row_space_basis(const QMat& rows);

enum class SolveStatus { unique, none, underdetermined };
struct SolveResult {
  SolveStatus status;
  QVec solution;  // meaningful only when status == unique
};
// Solves a x = b for x where a has dimensions rows x cols.
SolveResult solve_linear(const QMat& a, const QVec& b);

// Scales to integer entries with content 1, preserving direction; zero stays zero.
ZVec primitive_integer(const QVec& v);

// Canonical row Hermite normal form basis of the row lattice (zero rows dropped):
// positive pivots, entries above each pivot reduced into [0, pivot).
ZMat hermite_basis(ZMat rows);

// Basis rows of the saturated lattice {c : m c = 0} over the integers.
ZMat integer_kernel(const ZMat& m);

// Nonzero elementary divisors d1 | d2 | ... of m.
std::vector<Int> smith_divisors(ZMat m);

// Exact determinant of a square integer matrix (Bareiss, fraction free).
Int det_bareiss(ZMat m);

std::string format_qvec(const QVec& v);

}  // namespace kmsph
