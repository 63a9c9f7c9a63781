#include <kmsph/shell.hpp>

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "errs.hpp"
#include "mats.hpp"
#include "paths.hpp"

using namespace kmsph;
using namespace kmsph::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_lint(const ValidationReport& r, const std::string& text) {
  return std::find(r.lints.begin(), r.lints.end(), text) != r.lints.end();
}

}  // namespace

TEST_CASE("fixtures load and match the in-code constructions") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    LoadedDatum loaded = load_datum_file(fixture_path(entry.name + ".json"));
    CHECK(loaded.name == entry.name);
    CHECK(loaded.registry.empty());
    CHECK(loaded.datum == corpus_datum(entry.name));
  }
}

TEST_CASE("corpus outcomes") {
  REQUIRE(corpus().size() == 6);
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    LoadedDatum loaded = load_datum_file(fixture_path(entry.name + ".json"));
    ValidationReport report = validate(loaded.name, loaded.datum, loaded.registry);
    CHECK(report.axioms_pass == entry.axioms_pass);
    REQUIRE(report.finite.has_value());
    CHECK(report.finite->finite == entry.finite);
    CHECK(report.pass == (entry.axioms_pass && entry.finite));
  }
}

TEST_CASE("registry files parse") {
  auto reg = load_registry_file(fixture_path("registry_ex_second_K.json"));
  REQUIRE(reg.size() == 1);
  CHECK(reg[0].sigma == qv({2, 0}));
  CHECK(reg[0].sp_cap_supp.empty());
  CHECK(reg[0].compatible);

  auto reg_new = load_registry_file(fixture_path("registry_ex_new.json"));
  REQUIRE(reg_new.size() == 1);
  CHECK(reg_new[0].sp_cap_supp == std::vector<std::string>{"a1"});
}

TEST_CASE("registries settle unconfirmed roots") {
  LoadedDatum loaded = load_datum_file(fixture_path("ex_second_K.json"));
  ValidationOptions strict;
  strict.strict_compat = true;

  ValidationReport bare = validate(loaded.name, loaded.datum, {}, strict);
  CHECK_FALSE(bare.axioms_pass);

  auto reg = load_registry_file(fixture_path("registry_ex_second_K.json"));
  ValidationReport settled = validate(loaded.name, loaded.datum, reg, strict);
  CHECK(settled.axioms_pass);
  CHECK(settled.pass);
  CHECK_FALSE(has_lint(settled, "compatibility unconfirmed for 2a0"));
}

TEST_CASE("parser rejects malformed input") {
  CHECK(throws_errc([] { parse_datum_text("{"); }, Errc::parse_error));
  CHECK(throws_errc([] { parse_datum_text("[]"); }, Errc::schema_violation));
  CHECK(throws_errc([] { load_datum_file("/nonexistent/file.json"); }, Errc::parse_error));

  const std::string base = R"({
    "name": "t",
    "cartan": [[2, -2], [-2, 2]],
    "datum": {"Sp": [], "Sigma": [[1, 0]], "Xi_basis": [[1, 0], [0, 1]], "A": []}
  })";
  CHECK(parse_datum_text(base).name == "t");

  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2]], "surprise": 1,
                             "datum": {"Sp": [], "Sigma": [], "Xi_basis": [[1]], "A": []}})");
      },
      Errc::schema_violation));
  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2.0]],
                             "datum": {"Sp": [], "Sigma": [], "Xi_basis": [[1]], "A": []}})");
      },
      Errc::schema_violation));
  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2]],
                             "datum": {"Sp": [], "Sigma": [[0.5]], "Xi_basis": [[1]], "A": []}})");
      },
      Errc::schema_violation));
  // Fractional functionals are structurally invalid rather than unparsable.
  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2]],
                             "datum": {"Sp": [], "Sigma": [["1/1"]], "Xi_basis": [["1/2"]],
                                       "A": [{"name": "D", "rho": ["1/2"]}]}})");
      },
      Errc::invariant_violation));
  // A spherical root outside the lattice.
  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2, -2], [-2, 2]],
                             "datum": {"Sp": [], "Sigma": [[1, 0]], "Xi_basis": [[0, 1]],
                                       "A": []}})");
      },
      Errc::invariant_violation));
  // Unknown S^p label.
  CHECK(throws_errc(
      [] {
        parse_datum_text(R"({"name": "t", "cartan": [[2]],
                             "datum": {"Sp": ["b7"], "Sigma": [], "Xi_basis": [[1]], "A": []}})");
      },
      Errc::unknown_label));

  CHECK(throws_errc([] { parse_registry_text(R"({"compat_registry": [{"sigma": [1],
      "Sp_cap_supp": [], "status": "maybe"}]})"); },
                    Errc::schema_violation));
}

TEST_CASE("rational strings round-trip through the parser") {
  const std::string text = R"({
    "name": "halves",
    "cartan": [[2, 0], [0, 2]],
    "datum": {"Sp": [], "Sigma": [["1/2", "1/2"]], "Xi_basis": [["1/2", "1/2"]], "A": []}
  })";
  LoadedDatum loaded = parse_datum_text(text);
  CHECK(loaded.datum.sigma() == QMat{{rat(1, 2), rat(1, 2)}});
  std::string out = datum_file_text(loaded.name, loaded.datum);
  CHECK(out.find("\"1/2\"") != std::string::npos);
  CHECK(parse_datum_text(out).datum == loaded.datum);
}

TEST_CASE("serialization round-trips") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    LoadedDatum loaded = load_datum_file(fixture_path(entry.name + ".json"));
    auto reg = entry.name == "ex_second_K"
                   ? load_registry_file(fixture_path("registry_ex_second_K.json"))
                   : std::vector<CompatEntry>{};
    std::string text = datum_file_text(loaded.name, loaded.datum, reg);
    LoadedDatum again = parse_datum_text(text);
    CHECK(again.name == loaded.name);
    CHECK(again.datum == loaded.datum);
    CHECK(again.registry == reg);
    CHECK(datum_file_text(again.name, again.datum, again.registry) == text);
  }
}

TEST_CASE("localization output round-trips with its annotations") {
  auto d = build_ex_second();
  auto loc = localize_at_simple_roots(d, {1});
  std::string text = datum_file_text("ex_second_loc", loc.system, {}, &loc.color_map,
                                     &loc.rank_drop);
  CHECK(text.find("\"rank_drop\": 1") != std::string::npos);
  CHECK(text.find("\"color_map\"") != std::string::npos);
  LoadedDatum again = parse_datum_text(text);
  CHECK(again.datum == loc.system);
}

TEST_CASE("report lints") {
  auto dep = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}}))),
      {}, qm({{1, 0}, {0, 1}, {1, 1}}), IntegerLattice::make(qm({{1, 0}, {0, 1}})), {});
  auto r = validate("dep", dep);
  CHECK(has_lint(r, "Sigma is linearly dependent"));
  CHECK(has_lint(r, "compatibility registry matches on S^p within supp(sigma) only"));
  CHECK_FALSE(r.pass);

  auto horo = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}}))),
      {}, {}, IntegerLattice::make(qm({{1, 0}, {0, 1}})), {});
  r = validate("horo", horo);
  CHECK(has_lint(r, "horospherical: Sigma is empty"));
  CHECK(r.axioms_pass);
  REQUIRE(r.finite.has_value());
  CHECK(r.finite->finite);
  CHECK(r.finite->witness->a1.empty());
  CHECK(r.pass);

  auto fresh = load_datum_file(fixture_path("ex_new.json"));
  r = validate(fresh.name, fresh.datum);
  CHECK(has_lint(r, "compatibility unconfirmed for a0+a1+a2"));
  CHECK(has_lint(r, "compatibility registry matches on S^p within supp(sigma) only"));
}

TEST_CASE("structure errors surface as lints") {
  // S^p root moved by an A-element: axioms A1-A3 and Sigma1/2 all pass, but
  // the type partition is inconsistent.
  auto moved = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(
          GeneralizedCartanMatrix::make(zm({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}}))),
      {2}, qm({{1, 0, 0}, {0, 1, 0}}), IntegerLattice::make(qm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
      {{"D0+", zv({1, 0, 0})},
       {"D0-", zv({1, -2, 0})},
       {"D1+", zv({0, 1, 1})},
       {"D1-", zv({-2, 1, -1})}});
  auto r = validate("moved", moved);
  CHECK(r.axioms_pass);
  CHECK_FALSE(r.structure_ok);
  CHECK_FALSE(r.partition.has_value());
  CHECK_FALSE(r.finite.has_value());
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& l : r.lints)
    if (l.rfind("structure: ", 0) == 0) found = true;
  CHECK(found);
}

TEST_CASE("validation options map through") {
  LoadedDatum loaded = load_datum_file(fixture_path("ex_second_K.json"));
  ValidationOptions opts;
  opts.ft.exclude_doubled_roots = true;
  auto r = validate(loaded.name, loaded.datum, {}, opts);
  CHECK(r.axioms_pass);
  REQUIRE(r.finite.has_value());
  CHECK_FALSE(r.finite->finite);
  CHECK_FALSE(r.pass);

  opts.ft.exclude_doubled_roots = false;
  opts.lenient_a1 = true;
  r = validate(loaded.name, loaded.datum, {}, opts);
  CHECK(r.pass);
}

TEST_CASE("reports are deterministic") {
  LoadedDatum loaded = load_datum_file(fixture_path("ex_second.json"));
  auto r1 = validate(loaded.name, loaded.datum);
  auto r2 = validate(loaded.name, loaded.datum);
  CHECK(report_json(r1) == report_json(r2));
  CHECK(report_text(r1) == report_text(r2));
}

TEST_CASE("report text states the verdict") {
  LoadedDatum good = load_datum_file(fixture_path("ex_verysolv.json"));
  std::string text = report_text(validate(good.name, good.datum));
  CHECK(text.find("finite-type: PRESENT") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);

  LoadedDatum red = load_datum_file(fixture_path("ex_veryred.json"));
  text = report_text(validate(red.name, red.datum));
  CHECK(text.find("finite-type: ABSENT") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("reports match the golden files") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    LoadedDatum loaded = load_datum_file(fixture_path(entry.name + ".json"));
    ValidationReport report = validate(loaded.name, loaded.datum, loaded.registry);
    CHECK(report_json(report) == slurp(fixture_path("expected/" + entry.name + ".report.json")));
  }
}

TEST_CASE("diagrams match the golden files") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    LoadedDatum loaded = load_datum_file(fixture_path(entry.name + ".json"));
    CHECK(emit_diagram(loaded.datum, DiagramFormat::ascii) ==
          slurp(fixture_path("expected/" + entry.name + ".diagram.txt")));
    CHECK(emit_diagram(loaded.datum, DiagramFormat::tex) ==
          slurp(fixture_path("expected/" + entry.name + ".diagram.tex")));
  }
}

TEST_CASE("empty diagram") {
  auto empty = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(ZMat{})), {}, {},
      IntegerLattice::make({}), {});
  CHECK(emit_diagram(empty, DiagramFormat::ascii) == "(empty diagram)\n");
}
