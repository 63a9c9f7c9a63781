#pragma once

#include <optional>

#include "kmsph/linalg.hpp"
#include "kmsph/lp.hpp"

namespace kmsph {

// A finitely generated sublattice of the ambient space, given by a basis of
// Q-linearly independent rows.
class IntegerLattice {
 public:
  static IntegerLattice make(QMat basis);
  int rank() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return basis_.empty() ? 0 : static_cast<int>(basis_[0].size()); }
  const QMat& basis() const { return basis_; }

  bool operator==(const IntegerLattice& other) const = default;

 private:
  explicit IntegerLattice(QMat basis) : basis_(std::move(basis)) {}
  QMat basis_;
};

// Integer coordinates of x over the basis, or nullopt when x is outside.
std::optional<ZVec> lattice_membership(const IntegerLattice& lattice, const QVec& x);

// gcd of the coordinates equals 1; errors with NotInLattice.
bool is_primitive(const IntegerLattice& lattice, const QVec& x);

// Index of span(sub_rows) inside its saturation in `lattice`, via Smith
// normal form; errors with NotASublattice when a row is outside the lattice.
Int saturation_index(const IntegerLattice& lattice, const QMat& sub_rows);

// Cones live on the dual side: points v in Q^dim paired against value rows.
struct PolyhedralCone {
  int dim = 0;
  QMat eq;  // rows h with h.v == 0
  QMat le;  // rows h with h.v <= 0
};

struct ConeGenerators {
  QMat lines;  // canonical RREF basis of the lineality space
  QMat rays;   // extreme modulo lineality; primitive integer, lex-sorted
};

// Double description: V-representation of an H-cone. Exact and deterministic.
ConeGenerators dd_generators(const PolyhedralCone& cone);

// Is x a combination of the lines plus a nonnegative combination of the rays?
bool in_generated_cone(const ConeGenerators& gens, const QVec& x);

// Mutual containment of the two representations at desk scale: the generators
// satisfy every constraint, and every extreme direction of the H-cone lies in
// the generated cone (membership decided by the LP, not by double description).
bool representations_consistent(const PolyhedralCone& cone, const ConeGenerators& gens);

// sigma_rows: value rows of the spherical roots on the lattice basis of rank
// `rank` (so cones live in Q^rank). sub indexes the subset Sigma'. True iff
// some v has <v,sigma> = 0 exactly on Sigma' and < 0 on the rest of Sigma.
bool neighbor_set(const QMat& sigma_rows, const std::vector<int>& sub, int rank);

// Basis (canonical RREF rows) of the linear span of the face cut out by a
// neighbor set; errors with NotANeighborSet.
QMat face_span(const QMat& sigma_rows, const std::vector<int>& sub, int rank);

}  // namespace kmsph
