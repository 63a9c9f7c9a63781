#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kmsph/cartan.hpp"
#include "kmsph/errors.hpp"
#include "kmsph/localize.hpp"
#include "kmsph/shell.hpp"

namespace kmsph {

namespace {

std::vector<CompatEntry> merged_registry(const LoadedDatum& loaded,
                                         const std::string& registry_path) {
  std::vector<CompatEntry> registry = loaded.registry;
  if (!registry_path.empty()) {
    std::vector<CompatEntry> extra = load_registry_file(registry_path);
    registry.insert(registry.end(), extra.begin(), extra.end());
  }
  return registry;
}

std::vector<int> labels_to_indices(const GeneralizedCartanMatrix& gcm,
                                   const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const std::string& l : labels) out.push_back(gcm.index_of(l));
  return out;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::parse_error, "cannot write " + out_path);
  out << text;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Spherical data over generalized Cartan matrices"};
  app.require_subcommand(1);

  std::string path, registry_path, out_path, format = "ascii";
  bool strict_compat = false, lenient_a1 = false, json_out = false, exclude_doubled = false;
  std::vector<std::string> subset_labels, simple_roots;
  std::vector<int> spherical_roots, word;
  std::vector<std::string> target;

  CLI::App* validate_cmd = app.add_subcommand("validate", "Run all axiom checks on a datum file");
  validate_cmd->add_option("file", path, "datum file")->required();
  validate_cmd->add_option("--registry", registry_path, "extra compatibility registry file");
  validate_cmd->add_flag("--strict-compat", strict_compat,
                         "treat unconfirmed compatibility as failure");
  validate_cmd->add_flag("--lenient-a1", lenient_a1, "check only the value-1 clause of A1");
  validate_cmd->add_flag("--exclude-doubled-roots", exclude_doubled,
                         "drop roots with doubled spherical root from the S2 universe");
  validate_cmd->add_flag("--json", json_out, "machine-readable report");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Finite-type query for a subset of the Cartan matrix");
  classify_cmd->add_option("file", path, "datum file")->required();
  classify_cmd->add_option("--subset", subset_labels, "node labels (default: all)")
      ->delimiter(',');

  CLI::App* ft_cmd = app.add_subcommand("finite-type", "Search for a finite-type witness");
  ft_cmd->add_option("file", path, "datum file")->required();
  ft_cmd->add_flag("--exclude-doubled-roots", exclude_doubled,
                   "drop roots with doubled spherical root from the S2 universe");

  CLI::App* localize_cmd = app.add_subcommand("localize", "Restrict the datum");
  localize_cmd->add_option("file", path, "datum file")->required();
  CLI::Option* sr_opt = localize_cmd
                            ->add_option("--simple-roots", simple_roots,
                                         "labels of the simple roots to keep")
                            ->delimiter(',');
  localize_cmd
      ->add_option("--spherical-roots", spherical_roots,
                   "indices into Sigma forming a neighbor set")
      ->delimiter(',')
      ->excludes(sr_opt);
  localize_cmd->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* colors_cmd = app.add_subcommand("colors", "Print the derived color table");
  colors_cmd->add_option("file", path, "datum file")->required();
  colors_cmd->add_flag("--json", json_out, "machine-readable table");

  CLI::App* diagram_cmd = app.add_subcommand("diagram", "Render the decorated diagram");
  diagram_cmd->add_option("file", path, "datum file")->required();
  diagram_cmd->add_option("--format", format, "ascii or tex")
      ->check(CLI::IsMember({"ascii", "tex"}));

  CLI::App* reflect_cmd = app.add_subcommand("reflect", "Apply a word of simple reflections");
  reflect_cmd->add_option("file", path, "datum file")->required();
  reflect_cmd->add_option("--word", word, "node indices, applied left to right")->delimiter(',');
  reflect_cmd->add_option("--target", target, "character in ambient coordinates")
      ->delimiter(',')
      ->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    LoadedDatum loaded = load_datum_file(path);

    if (app.got_subcommand(validate_cmd)) {
      ValidationOptions options;
      options.strict_compat = strict_compat;
      options.lenient_a1 = lenient_a1;
      options.ft.exclude_doubled_roots = exclude_doubled;
      ValidationReport report =
          validate(loaded.name, loaded.datum, merged_registry(loaded, registry_path), options);
      std::cout << (json_out ? report_json(report) : report_text(report));
      return report.pass ? 0 : 1;
    }

    if (app.got_subcommand(classify_cmd)) {
      const GeneralizedCartanMatrix& gcm = loaded.datum.ambient().gcm();
      std::vector<int> subset;
      if (subset_labels.empty())
        for (int i = 0; i < gcm.n(); ++i) subset.push_back(i);
      else
        subset = labels_to_indices(gcm, subset_labels);
      subset = normalize_subset(gcm.n(), subset);
      bool finite = is_finite_type(gcm, subset);
      std::string names;
      for (size_t i = 0; i < subset.size(); ++i)
        names += (i ? ", " : "") + gcm.label(subset[i]);
      std::cout << "subset {" << names << "}: " << (finite ? "finite type" : "not finite type")
                << "\n";
      return finite ? 0 : 1;
    }

    if (app.got_subcommand(ft_cmd)) {
      FiniteTypeOptions options;
      options.exclude_doubled_roots = exclude_doubled;
      FiniteTypeResult res = check_finite_type(loaded.datum, options);
      if (!res.finite) {
        std::cout << "finite-type: ABSENT\n";
        return 1;
      }
      const FiniteTypeWitness& w = *res.witness;
      const auto& labels = loaded.datum.ambient().gcm().labels();
      auto braces = [&](const std::vector<std::string>& items) {
        std::string s = "{";
        for (size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
        return s + "}";
      };
      std::vector<std::string> s2, s1;
      for (int i : w.s2) s2.push_back(labels[i]);
      for (int i : w.s1) s1.push_back(labels[i]);
      std::cout << "finite-type: PRESENT\n"
                << "  A1 = " << braces(w.a1) << ", S2 = " << braces(s2) << ", S1 = " << braces(s1)
                << ", coeffs = " << format_qvec(w.coeffs)
                << ", eta = " << format_qvec(w.eta_on_sigma) << "\n";
      return 0;
    }

    if (app.got_subcommand(localize_cmd)) {
      bool have_simple = localize_cmd->count("--simple-roots") > 0;
      bool have_spherical = localize_cmd->count("--spherical-roots") > 0;
      if (!have_simple && !have_spherical)
        fail(Errc::invariant_violation,
             "localize needs --simple-roots or --spherical-roots");
      if (have_simple) {
        SystemLocalization loc = localize_at_simple_roots(
            loaded.datum, labels_to_indices(loaded.datum.ambient().gcm(), simple_roots));
        write_output(out_path, datum_file_text(loaded.name + "_loc", loc.system, {},
                                               &loc.color_map, &loc.rank_drop));
      } else {
        DatumLocalization loc = localize_at_spherical_roots(loaded.datum, spherical_roots);
        write_output(out_path, datum_file_text(loaded.name + "_loc", loc.datum, {},
                                               &loc.color_map, &loc.rank_drop));
      }
      return 0;
    }

    if (app.got_subcommand(colors_cmd)) {
      std::vector<Color> colors = derive_colors(loaded.datum);
      const auto& labels = loaded.datum.ambient().gcm().labels();
      if (json_out) {
        ValidationReport report = validate(loaded.name, loaded.datum, loaded.registry);
        std::cout << report_json(report);
        return 0;
      }
      for (const Color& c : colors) {
        std::string movers;
        for (size_t i = 0; i < c.movers.size(); ++i)
          movers += (i ? ", " : "") + labels[c.movers[i]];
        const char* kind = c.kind == ColorKind::a ? "a" : c.kind == ColorKind::two_a ? "2a" : "b";
        std::cout << c.id << " [" << kind << "] movers {" << movers << "} -> "
                  << format_qvec(c.functional) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(diagram_cmd)) {
      std::cout << emit_diagram(loaded.datum,
                                format == "tex" ? DiagramFormat::tex : DiagramFormat::ascii);
      return 0;
    }

    if (app.got_subcommand(reflect_cmd)) {
      QVec x;
      for (const std::string& t : target) x.push_back(parse_rat(t));
      QVec image = apply_word(loaded.datum.ambient(), word, std::move(x));
      std::cout << format_character(loaded.datum.ambient(), image) << "  "
                << format_qvec(image) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == Errc::not_a_neighbor_set ? 1 : 2;
  }
  return 2;
}

}  // namespace kmsph
