#pragma once

#include <stdexcept>
#include <string>

namespace kmsph {

enum class Errc {
  not_square,
  diagonal_not_two,
  positive_off_diagonal,
  zero_asymmetry,
  inconsistent_ambient,
  dependent_basis,
  not_in_root_span,
  not_a_positive_root,
  not_in_lattice,
  not_a_sublattice,
  not_a_neighbor_set,
  parse_error,
  schema_violation,
  invariant_violation,
  unknown_label,
  subset_cap_exceeded,
  internal_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kmsph
