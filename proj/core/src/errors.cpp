#include "kmsph/errors.hpp"

namespace kmsph {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_square: return "NotSquare";
    case Errc::diagonal_not_two: return "DiagonalNotTwo";
    case Errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case Errc::zero_asymmetry: return "ZeroAsymmetry";
    case Errc::inconsistent_ambient: return "InconsistentAmbient";
    case Errc::dependent_basis: return "DependentBasis";
    case Errc::not_in_root_span: return "NotInRootSpan";
    case Errc::not_a_positive_root: return "NotAPositiveRoot";
    case Errc::not_in_lattice: return "NotInLattice";
    case Errc::not_a_sublattice: return "NotASublattice";
    case Errc::not_a_neighbor_set: return "NotANeighborSet";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::subset_cap_exceeded: return "SubsetCapExceeded";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace kmsph
