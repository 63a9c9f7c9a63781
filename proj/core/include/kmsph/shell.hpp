#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmsph/datum.hpp"
#include "kmsph/localize.hpp"

namespace kmsph {

// A datum file: exact JSON, integers or "p/q" strings, unknown fields
// rejected. The `ambient` block is optional and defaults to the root-lattice
// model of the Cartan matrix.
struct LoadedDatum {
  std::string name;
  HomogeneousSphericalDatum datum;
  std::vector<CompatEntry> registry;
};

LoadedDatum parse_datum_text(const std::string& text);
LoadedDatum load_datum_file(const std::string& path);

// A registry file holds a single compat_registry array.
std::vector<CompatEntry> parse_registry_text(const std::string& text);
std::vector<CompatEntry> load_registry_file(const std::string& path);

// Canonical serialization; round-trips through parse_datum_text. Localization
// results carry their color_map and rank_drop.
std::string datum_file_text(const std::string& name, const HomogeneousSphericalDatum& datum,
                            const std::vector<CompatEntry>& registry = {},
                            const std::map<std::string, std::string>* color_map = nullptr,
                            const int* rank_drop = nullptr);

struct ValidationOptions {
  bool strict_compat = false;
  bool lenient_a1 = false;
  FiniteTypeOptions ft;
};

struct ValidationReport {
  std::string name;
  std::vector<std::string> labels;       // simple-root labels, for rendering
  std::vector<std::string> sigma_names;  // formatted spherical roots
  CheckResult a1, a2, a3, sigma1, sigma2;
  CheckSResult s;
  bool axioms_pass = false;
  bool structure_ok = true;  // partition and color derivation succeeded
  std::optional<TypePartition> partition;
  std::optional<std::vector<Color>> colors;
  std::optional<FiniteTypeResult> finite;
  std::vector<std::string> lints;
  bool pass = false;
};

ValidationReport validate(const std::string& name, const HomogeneousSphericalDatum& datum,
                          const std::vector<CompatEntry>& registry = {},
                          const ValidationOptions& options = {});

// Machine-diffable: sorted keys, exact numbers, no timestamps.
std::string report_json(const ValidationReport& report);
std::string report_text(const ValidationReport& report);

enum class DiagramFormat { ascii, tex };

// Deterministic text renderings of the decorated diagram; the golden files
// under fixtures/expected define the format.
std::string emit_diagram(const HomogeneousSphericalDatum& datum, DiagramFormat format);

struct CorpusEntry {
  std::string name;  // fixture stem under fixtures/
  bool axioms_pass;
  bool finite;
};

// The worked examples shipped as fixtures, with their expected outcomes.
const std::vector<CorpusEntry>& corpus();

}  // namespace kmsph
