#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "json.hpp"
#include "kmsph/localize.hpp"
#include "kmsph/shell.hpp"
#include "mats.hpp"
#include "paths.hpp"

using namespace kmsph;
using namespace kmsph::testing;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  CliResult res;
  try {
    res.code = run_cli(std::move(args));
  } catch (...) {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    throw;
  }
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace

TEST_CASE("cli validate") {
  auto ok = run({"validate", fixture_path("ex_verysolv.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("result: PASS") != std::string::npos);

  auto red = run({"validate", fixture_path("ex_veryred.json")});
  CHECK(red.code == 1);
  CHECK(red.out.find("finite-type: ABSENT") != std::string::npos);
  CHECK(red.out.find("result: FAIL") != std::string::npos);

  auto missing = run({"validate", "/nonexistent/nofile.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error [ParseError]") != std::string::npos);

  auto strict = run({"validate", fixture_path("ex_second_K.json"), "--strict-compat"});
  CHECK(strict.code == 1);

  auto settled = run({"validate", fixture_path("ex_second_K.json"), "--strict-compat",
                      "--registry", fixture_path("registry_ex_second_K.json")});
  CHECK(settled.code == 0);

  auto excluded =
      run({"validate", fixture_path("ex_second_K.json"), "--exclude-doubled-roots"});
  CHECK(excluded.code == 1);

  auto as_json = run({"validate", fixture_path("ex_second.json"), "--json"});
  CHECK(as_json.code == 0);
  auto parsed = nlohmann::json::parse(as_json.out);
  CHECK(parsed.at("pass").get<bool>());
  CHECK(parsed.at("name").get<std::string>() == "ex_second");
}

TEST_CASE("cli classify") {
  auto whole = run({"classify", fixture_path("ex_new.json")});
  CHECK(whole.code == 1);
  CHECK(whole.out == "subset {a0, a1, a2}: not finite type\n");

  auto sub = run({"classify", fixture_path("ex_new.json"), "--subset", "a0,a1"});
  CHECK(sub.code == 0);
  CHECK(sub.out == "subset {a0, a1}: finite type\n");

  auto bad = run({"classify", fixture_path("ex_new.json"), "--subset", "zz"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error [UnknownLabel]") != std::string::npos);
}

TEST_CASE("cli finite-type") {
  auto present = run({"finite-type", fixture_path("ex_verysolv.json")});
  CHECK(present.code == 0);
  CHECK(present.out.find("finite-type: PRESENT") != std::string::npos);
  CHECK(present.out.find("A1 = {D0+, D1+}, S2 = {}, S1 = {}, coeffs = (1, 1), eta = (1, 1)") !=
        std::string::npos);

  auto absent = run({"finite-type", fixture_path("ex_veryred.json")});
  CHECK(absent.code == 1);
  CHECK(absent.out == "finite-type: ABSENT\n");

  auto excluded = run({"finite-type", fixture_path("ex_second_K.json"),
                       "--exclude-doubled-roots"});
  CHECK(excluded.code == 1);
}

TEST_CASE("cli localize") {
  auto to_stdout = run({"localize", fixture_path("ex_second.json"), "--simple-roots", "a1"});
  CHECK(to_stdout.code == 0);
  LoadedDatum parsed = parse_datum_text(to_stdout.out);
  CHECK(parsed.name == "ex_second_loc");
  auto expected = localize_at_simple_roots(build_ex_second(), {1});
  CHECK(parsed.datum == expected.system);
  CHECK(to_stdout.out.find("\"rank_drop\": 1") != std::string::npos);

  std::string out_path =
      (std::filesystem::temp_directory_path() / "kmsph_cli_localize_out.json").string();
  auto to_file = run({"localize", fixture_path("ex_verysolv.json"), "--spherical-roots", "0",
                      "--out", out_path});
  CHECK(to_file.code == 0);
  LoadedDatum from_file = load_datum_file(out_path);
  CHECK(from_file.datum == localize_at_spherical_roots(build_ex_verysolv(), {0}).datum);

  auto neither = run({"localize", fixture_path("ex_second.json")});
  CHECK(neither.code == 2);
  CHECK(neither.err.find("error [InvariantViolation]") != std::string::npos);

  // A non-neighbor subset is a check failure, not an input error.
  auto opposite = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}}))),
      {}, qm({{1, -1}, {-1, 1}}), IntegerLattice::make(qm({{1, 0}, {0, 1}})), {});
  std::string opposite_path =
      (std::filesystem::temp_directory_path() / "kmsph_cli_opposite.json").string();
  {
    std::ofstream f(opposite_path);
    f << datum_file_text("opposite", opposite);
  }
  auto rejected = run({"localize", opposite_path, "--spherical-roots", "0"});
  CHECK(rejected.code == 1);
  CHECK(rejected.err.find("error [NotANeighborSet]") != std::string::npos);
}

TEST_CASE("cli colors") {
  auto table = run({"colors", fixture_path("ex_second_K.json")});
  CHECK(table.code == 0);
  CHECK(table.out ==
        "D_a0 [2a] movers {a0} -> (2, -1)\n"
        "D1+ [a] movers {a1} -> (0, 1)\n"
        "D1- [a] movers {a1} -> (-4, 1)\n");

  auto as_json = run({"colors", fixture_path("ex_second.json"), "--json"});
  CHECK(as_json.code == 0);
  auto parsed = nlohmann::json::parse(as_json.out);
  REQUIRE(parsed.at("colors").is_array());
  CHECK(parsed.at("colors").size() == 4);
}

TEST_CASE("cli diagram") {
  auto ascii = run({"diagram", fixture_path("ex_new.json")});
  CHECK(ascii.code == 0);
  LoadedDatum loaded = load_datum_file(fixture_path("ex_new.json"));
  CHECK(ascii.out == emit_diagram(loaded.datum, DiagramFormat::ascii));

  auto tex = run({"diagram", fixture_path("ex_new.json"), "--format", "tex"});
  CHECK(tex.code == 0);
  CHECK(tex.out == emit_diagram(loaded.datum, DiagramFormat::tex));

  auto bogus = run({"diagram", fixture_path("ex_new.json"), "--format", "svg"});
  CHECK(bogus.code == 2);
}

TEST_CASE("cli reflect") {
  auto res = run({"reflect", fixture_path("ex_new.json"), "--word", "0,1,0", "--target",
                  "0,0,1"});
  CHECK(res.code == 0);
  CHECK(res.out == "a0+a1+a2  (1, 1, 1)\n");

  auto empty_word = run({"reflect", fixture_path("ex_new.json"), "--target", "1,0,0"});
  CHECK(empty_word.code == 0);
  CHECK(empty_word.out == "a0  (1, 0, 0)\n");
}

TEST_CASE("cli usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"frobnicate", "x.json"}).code == 2);
}
