#pragma once

#include "kmsph/cartan.hpp"
#include "kmsph/linalg.hpp"

namespace kmsph {

// A rational vector space containing the simple roots, together with the
// coroot pairing functionals. Characters are coordinate vectors of length dim.
class AmbientSpace {
 public:
  // Validates sum_j coroot_pairing[i][j] * simple_roots[k][j] == a[i][k].
  static AmbientSpace make(GeneralizedCartanMatrix gcm, int dim, QMat simple_roots,
                           QMat coroot_pairing);
  // Simple roots as standard basis vectors, pairing rows given by the matrix.
  static AmbientSpace root_lattice_model(GeneralizedCartanMatrix gcm);

  const GeneralizedCartanMatrix& gcm() const { return gcm_; }
  int n() const { return gcm_.n(); }
  int dim() const { return dim_; }
  const QVec& simple_root(int i) const { return simple_roots_[i]; }
  const QMat& simple_roots() const { return simple_roots_; }
  const QMat& coroot_pairing() const { return coroot_pairing_; }
  bool is_root_lattice_model() const;

  bool operator==(const AmbientSpace& other) const = default;

 private:
  AmbientSpace(GeneralizedCartanMatrix gcm, int dim, QMat sr, QMat cp);
  GeneralizedCartanMatrix gcm_;
  int dim_;
  QMat simple_roots_;
  QMat coroot_pairing_;
};

// <alpha_i^vee, x>.
Rat pair_coroot(const AmbientSpace& space, int i, const QVec& x);

// s_i(x) = x - <alpha_i^vee, x> alpha_i.
QVec simple_reflection(const AmbientSpace& space, int i, QVec x);

// Left-to-right composition: apply_word([i,j,k], x) = s_i(s_j(s_k(x))).
QVec apply_word(const AmbientSpace& space, const std::vector<int>& word, QVec x);

struct Expansion {
  SolveStatus status;
  QVec coeffs;  // coefficients over the simple roots when status == unique
};
Expansion root_expansion(const AmbientSpace& space, const QVec& x);

// Indices of simple roots appearing in the (unique) expansion of x.
// Errors with NotInRootSpan when no unique expansion exists.
std::vector<int> support(const AmbientSpace& space, const QVec& x);

// Sum of the expansion coefficients outside s_prime; requires x to be a
// nonnegative integer combination of simple roots (NotAPositiveRoot otherwise).
Int s_prime_height(const AmbientSpace& space, const QVec& x, const std::vector<int>& s_prime);

// Human-readable rendering, e.g. "a0+2a1" or "(1, 1/2)" for characters
// outside the root span.
std::string format_character(const AmbientSpace& space, const QVec& x);

}  // namespace kmsph
