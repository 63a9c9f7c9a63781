#include <kmsph/localize.hpp>

#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "errs.hpp"
#include "mats.hpp"

using namespace kmsph;
using namespace kmsph::testing;

namespace {

const std::vector<std::string> kCorpusNames = {"ex_verysolv", "ex_second", "ex_second_K",
                                               "ex_conj",     "ex_new",    "ex_veryred"};

std::vector<std::vector<int>> subsets_of(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sub.push_back(i);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

TEST_CASE("localization at a single simple root") {
  auto d = build_ex_second();
  auto loc = localize_at_simple_roots(d, {1});
  CHECK(loc.nodes == std::vector<int>{1});
  CHECK(loc.rank_drop == 1);
  CHECK(loc.system.ambient().gcm().matrix() == zm({{2}}));
  CHECK(loc.system.ambient().gcm().labels() == std::vector<std::string>{"a1"});
  CHECK(loc.system.sigma() == qm({{1}}));
  CHECK(loc.system.xi().basis() == qm({{1}}));
  REQUIRE(loc.system.a_family().size() == 2);
  CHECK(loc.system.a_family()[0].name == "D1+");
  CHECK(loc.system.a_family()[0].rho == zv({1}));
  CHECK(loc.system.a_family()[1].name == "D1-");
  CHECK(loc.system.a_family()[1].rho == zv({1}));
  CHECK(loc.color_map ==
        std::map<std::string, std::string>{{"D1+", "D1+"}, {"D1-", "D1-"}});
}

TEST_CASE("localization at all simple roots is the identity") {
  for (const auto& name : kCorpusNames) {
    CAPTURE(name);
    auto d = corpus_datum(name);
    std::vector<int> all;
    for (int i = 0; i < d.ambient().n(); ++i) all.push_back(i);
    auto loc = localize_at_simple_roots(d, all);
    CHECK(loc.system == d);
    CHECK(loc.rank_drop == 0);
  }
}

TEST_CASE("localization preserves pairings against surviving roots") {
  for (const auto& name : kCorpusNames) {
    auto d = corpus_datum(name);
    for (const auto& sub : subsets_of(d.ambient().n())) {
      CAPTURE(name);
      CAPTURE(sub);
      auto loc = localize_at_simple_roots(d, sub);
      // Match surviving spherical roots by their ambient row in the sub-basis.
      std::vector<int> kept;
      for (int s = 0; s < d.num_sigma(); ++s) {
        auto e = root_expansion(d.ambient(), d.sigma()[s]);
        bool inside = true;
        for (int i = 0; i < d.ambient().n(); ++i)
          if (e.coeffs[i] != 0 &&
              std::find(sub.begin(), sub.end(), i) == sub.end())
            inside = false;
        if (inside) kept.push_back(s);
      }
      REQUIRE(static_cast<int>(kept.size()) == loc.system.num_sigma());
      for (size_t t = 0; t < kept.size(); ++t) {
        // A-values survive by name.
        for (size_t nd = 0; nd < loc.system.a_family().size(); ++nd) {
          const std::string& nm = loc.system.a_family()[nd].name;
          int od = -1;
          for (size_t k = 0; k < d.a_family().size(); ++k)
            if (d.a_family()[k].name == nm) od = static_cast<int>(k);
          REQUIRE(od >= 0);
          CHECK(loc.system.a_value(static_cast<int>(nd), static_cast<int>(t)) ==
                d.a_value(od, kept[t]));
        }
        // Coroot values of surviving nodes survive too.
        for (size_t k = 0; k < loc.nodes.size(); ++k)
          CHECK(loc.system.coroot_on_sigma(static_cast<int>(k), static_cast<int>(t)) ==
                d.coroot_on_sigma(loc.nodes[k], kept[t]));
      }
    }
  }
}

TEST_CASE("two-step simple-root localization matches one step") {
  auto d = build_ex_conj();
  auto first = localize_at_simple_roots(d, {0, 1});
  auto second = localize_at_simple_roots(first.system, {0});
  auto direct = localize_at_simple_roots(d, {0});
  CHECK(second.system == direct.system);
  CHECK(first.nodes[second.nodes[0]] == direct.nodes[0]);
}

TEST_CASE("simple-root localization regenerates a dependent lattice") {
  auto d = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}}))),
      {}, qm({{1, 0}, {0, 1}, {1, 1}}),
      IntegerLattice::make(qm({{1, 0}, {0, 1}})), {});
  auto loc = localize_at_simple_roots(d, {0, 1});
  CHECK(loc.system.num_sigma() == 3);
  CHECK(loc.system.xi().basis() == qm({{1, 0}, {0, 1}}));
  CHECK(loc.rank_drop == 0);
}

TEST_CASE("localization at spherical roots cuts the lattice") {
  auto d = build_ex_verysolv();

  auto at0 = localize_at_spherical_roots(d, {0});
  CHECK(at0.sigma_indices == std::vector<int>{0});
  CHECK(at0.rank_drop == 1);
  CHECK(at0.datum.sigma() == qm({{1, 0}}));
  CHECK(at0.datum.xi().basis() == qm({{1, 0}}));
  REQUIRE(at0.datum.a_family().size() == 2);
  CHECK(at0.datum.a_family()[0].name == "D0+");
  CHECK(at0.datum.a_family()[0].rho == zv({1}));
  CHECK(at0.datum.a_family()[1].name == "D0-");
  CHECK(at0.datum.a_family()[1].rho == zv({1}));

  auto whole = localize_at_spherical_roots(d, {0, 1});
  CHECK(whole.datum == d);
  CHECK(whole.rank_drop == 0);

  auto none = localize_at_spherical_roots(d, {});
  CHECK(none.datum.num_sigma() == 0);
  CHECK(none.datum.xi().rank() == 0);
  CHECK(none.datum.a_family().empty());
  CHECK(none.rank_drop == 2);
}

TEST_CASE("localization at a doubled spherical root") {
  auto d = build_ex_second_K();
  auto loc = localize_at_spherical_roots(d, {0});
  CHECK(loc.rank_drop == 1);
  CHECK(loc.datum.sigma() == qm({{2, 0}}));
  CHECK(loc.datum.xi().basis() == qm({{2, 0}}));
  CHECK(loc.datum.a_family().empty());
  CHECK(check_sigma1(loc.datum).pass);

  auto other = localize_at_spherical_roots(d, {1});
  CHECK(other.datum.sigma() == qm({{0, 1}}));
  CHECK(other.datum.xi().basis() == qm({{0, 1}}));
  REQUIRE(other.datum.a_family().size() == 2);
  CHECK(other.datum.a_family()[0].rho == zv({1}));
  CHECK(other.datum.a_family()[1].rho == zv({1}));
}

TEST_CASE("spherical-root localization keeps the axioms on the corpus") {
  for (const auto& name : kCorpusNames) {
    auto d = corpus_datum(name);
    for (const auto& sub : subsets_of(d.num_sigma())) {
      CAPTURE(name);
      CAPTURE(sub);
      QMat coords;
      for (const auto& row : d.sigma_coords()) coords.push_back(to_qvec(row));
      if (!neighbor_set(coords, sub, d.xi().rank())) continue;
      auto loc = localize_at_spherical_roots(d, sub);
      CHECK(check_a1(loc.datum).pass);
      CHECK(check_a2(loc.datum).pass);
      CHECK(check_a3(loc.datum).pass);
      CHECK(check_sigma1(loc.datum).pass);
      CHECK(check_sigma2(loc.datum).pass);
      CHECK(loc.rank_drop == d.xi().rank() - loc.datum.xi().rank());
    }
  }
}

TEST_CASE("non-neighbor subsets are rejected") {
  auto opposite = HomogeneousSphericalDatum::make(
      AmbientSpace::root_lattice_model(GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}}))),
      {}, qm({{1, -1}, {-1, 1}}), IntegerLattice::make(qm({{1, 0}, {0, 1}})), {});
  CHECK(throws_errc([&] { localize_at_spherical_roots(opposite, {0}); },
                    Errc::not_a_neighbor_set));
  CHECK(throws_errc([&] { localize_at_spherical_roots(build_ex_verysolv(), {5}); },
                    Errc::invariant_violation));
}
