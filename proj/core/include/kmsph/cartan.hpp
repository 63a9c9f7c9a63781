#pragma once

#include <string>
#include <vector>

#include "kmsph/errors.hpp"
#include "kmsph/rational.hpp"

namespace kmsph {

struct GcmIssue {
  Errc code;
  int i;
  int j;
};

std::vector<GcmIssue> gcm_violations(const ZMat& a);

class GeneralizedCartanMatrix {
 public:
  // Validates all structural invariants; throws InvariantViolation listing
  // every violated one. Empty labels means default a0..a{n-1}.
  static GeneralizedCartanMatrix make(ZMat a, std::vector<std::string> labels = {});

  int n() const { return static_cast<int>(a_.size()); }
  const Int& at(int i, int j) const { return a_[i][j]; }
  const ZMat& matrix() const { return a_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Throws UnknownLabel.
  int index_of(const std::string& label) const;

  bool operator==(const GeneralizedCartanMatrix& other) const = default;

 private:
  GeneralizedCartanMatrix(ZMat a, std::vector<std::string> labels);
  ZMat a_;
  std::vector<std::string> labels_;
};

// Connected components of the subdiagram spanned by `subset`, each sorted,
// ordered by smallest member. Indices are validated.
std::vector<std::vector<int>> connected_components(const GeneralizedCartanMatrix& gcm,
                                                   const std::vector<int>& subset);

// True iff every principal minor of every component's principal submatrix is
// strictly positive. Valid for arbitrary generalized Cartan matrices; matrices
// that are not symmetrizable are never of finite type and are caught by the
// minor test as well.
bool is_finite_type(const GeneralizedCartanMatrix& gcm, const std::vector<int>& subset);

// Principal submatrix on `subset` (sorted ascending), labels carried over.
GeneralizedCartanMatrix principal_submatrix(const GeneralizedCartanMatrix& gcm,
                                            const std::vector<int>& subset);

// Sorts, deduplicates, and bound-checks a node subset.
std::vector<int> normalize_subset(int n, std::vector<int> subset);

}  // namespace kmsph
