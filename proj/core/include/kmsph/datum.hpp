#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmsph/characters.hpp"
#include "kmsph/cones.hpp"

namespace kmsph {

// An element of the family A, given by its functional on the Xi basis.
// Functionals on Xi are integral; rational data is rejected at parse time.
struct AElement {
  std::string name;
  ZVec rho;

  bool operator==(const AElement& other) const = default;
};

// (S^p, Sigma, A, Xi) over a fixed ambient space. Spherical roots are stored
// in ambient coordinates; their coordinates over the Xi basis are cached.
class HomogeneousSphericalDatum {
 public:
  static HomogeneousSphericalDatum make(AmbientSpace ambient, std::vector<int> sp,
                                        QMat sigma, IntegerLattice xi,
                                        std::vector<AElement> a);

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<int>& sp() const { return sp_; }
  const QMat& sigma() const { return sigma_; }
  int num_sigma() const { return static_cast<int>(sigma_.size()); }
  const IntegerLattice& xi() const { return xi_; }
  const std::vector<AElement>& a_family() const { return a_; }
  const ZMat& sigma_coords() const { return sigma_coords_; }

  bool in_sp(int i) const;
  // Index into Sigma of the simple root alpha_i (or of 2 alpha_i), -1 if absent.
  int sigma_index_of_simple(int i) const;
  int sigma_index_of_doubled(int i) const;
  // <rho(d), sigma_s>.
  Int a_value(int d, int s) const;
  // alpha_i^vee restricted to Xi, as values on the basis.
  QVec coroot_on_basis(int i) const;
  Rat coroot_on_sigma(int i, int s) const;

  bool operator==(const HomogeneousSphericalDatum& other) const = default;

 private:
  HomogeneousSphericalDatum(AmbientSpace ambient, std::vector<int> sp, QMat sigma,
                            IntegerLattice xi, std::vector<AElement> a, ZMat coords);
  AmbientSpace ambient_;
  std::vector<int> sp_;
  QMat sigma_;
  IntegerLattice xi_;
  std::vector<AElement> a_;
  ZMat sigma_coords_;
};

struct CheckResult {
  bool pass = true;
  std::vector<std::string> notes;
};

// Values of A-functionals on spherical roots are at most 1, and a positive
// value singles out a simple spherical root. The lenient variant only
// inspects the value 1; on integral functionals the two agree.
CheckResult check_a1(const HomogeneousSphericalDatum& datum, bool strict = true);
// Each simple spherical root is moved by exactly two A-elements, whose
// functionals sum to the restricted coroot.
CheckResult check_a2(const HomogeneousSphericalDatum& datum);
// Every A-element moves some simple spherical root.
CheckResult check_a3(const HomogeneousSphericalDatum& datum);
// 2 alpha in Sigma forces <alpha^vee, Xi> to consist of even integers.
CheckResult check_sigma1(const HomogeneousSphericalDatum& datum);
// Orthogonal alpha, beta with alpha + beta in Sigma or in 2 Sigma restrict to
// the same coroot functional on Xi.
CheckResult check_sigma2(const HomogeneousSphericalDatum& datum);

enum class CompatStatus { compatible, incompatible, unconfirmed };

// Registry entry confirming or refuting a spherical root shape for a given
// Cartan matrix. Keyed by the expansion over the simple roots together with
// the labels of S^p inside the support.
struct CompatEntry {
  QVec sigma;
  std::vector<std::string> sp_cap_supp;
  bool compatible = true;
  std::string note;

  bool operator==(const CompatEntry& other) const = default;
};

struct SigmaCompat {
  int sigma_index = -1;
  CompatStatus status = CompatStatus::unconfirmed;
  std::string note;
};

struct CheckSResult {
  bool pass = true;
  std::vector<SigmaCompat> entries;
};

// Compatibility of each spherical root with (S, S^p). Simple roots are decided
// outright; doubled and composite shapes need a registry entry, otherwise they
// are reported unconfirmed (a failure only under strict).
CheckSResult check_s(const HomogeneousSphericalDatum& datum,
                     const std::vector<CompatEntry>& registry = {}, bool strict = false);

struct TypePartition {
  std::vector<int> a;      // alpha in Sigma
  std::vector<int> two_a;  // 2 alpha in Sigma
  std::vector<int> b;      // the rest outside S^p
  std::vector<int> p;      // S^p
};

// Errors with InvariantViolation when S^p meets the first two classes or an
// S^p root inside Xi is moved by an A-element.
TypePartition type_partition(const HomogeneousSphericalDatum& datum);

enum class ColorKind { a, two_a, b };

struct Color {
  std::string id;
  ColorKind kind;
  std::vector<int> movers;
  QVec functional;  // values on the Xi basis
};

// Colors with their functionals: the A-family for type a, half coroots for
// type 2a, full coroots for type b with orthogonal identifications merged.
// A merge with mismatched functionals errors with InvariantViolation.
std::vector<Color> derive_colors(const HomogeneousSphericalDatum& datum);

struct FiniteTypeOptions {
  // Drop simple roots whose double is a spherical root from the S2 universe.
  bool exclude_doubled_roots = false;
  // 0 means the KMSPH_MAX_SUBSETS environment variable, defaulting to 2^20.
  unsigned long max_subsets = 0;
};

struct FiniteTypeWitness {
  std::vector<std::string> a1;      // names of the chosen A-elements
  std::vector<int> s2;              // chosen simple roots
  std::vector<int> s1;              // simple spherical roots all of whose movers are in a1
  QVec coeffs;                      // strictly positive, over a1 then s2
  QVec eta_on_sigma;                // values of eta on each spherical root
};

struct FiniteTypeResult {
  bool finite = false;
  std::optional<FiniteTypeWitness> witness;
};

// Searches subsets of the A-family and of the eligible simple roots, smallest
// first, for a witness whose support set S1 u S2 u S^p spans a finite-type
// subdiagram and whose combination is strictly positive on Sigma. The first
// witness in (popcount, value) order is returned; by minimality its
// coefficients are strictly positive. Errors with SubsetCapExceeded when the
// search space is larger than the cap.
FiniteTypeResult check_finite_type(const HomogeneousSphericalDatum& datum,
                                   const FiniteTypeOptions& options = {});

}  // namespace kmsph
