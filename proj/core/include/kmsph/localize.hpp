#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmsph/datum.hpp"

namespace kmsph {

// Restriction to a subset of simple roots. The result lives over the
// principal submatrix in its root-lattice model, with lattice Span_Z of the
// surviving spherical roots; A-element identity is preserved by name.
struct SystemLocalization {
  HomogeneousSphericalDatum system;
  std::vector<int> nodes;                         // original indices of S', ascending
  std::map<std::string, std::string> color_map;   // new A-element name -> original
  int rank_drop = 0;
};

SystemLocalization localize_at_simple_roots(const HomogeneousSphericalDatum& datum,
                                            std::vector<int> s_prime);

// Restriction to a neighbor set of spherical roots: Xi is cut down to the
// annihilator of the face spanned by the subset, everything else stays in the
// same ambient space. Errors with NotANeighborSet.
struct DatumLocalization {
  HomogeneousSphericalDatum datum;
  std::vector<int> sigma_indices;                 // surviving rows, ascending
  std::map<std::string, std::string> color_map;
  int rank_drop = 0;
};

DatumLocalization localize_at_spherical_roots(const HomogeneousSphericalDatum& datum,
                                              std::vector<int> sigma_sub);

}  // namespace kmsph
