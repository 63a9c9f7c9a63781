#include <kmsph/cartan.hpp>

#include <doctest.h>

#include "errs.hpp"
#include "mats.hpp"
#include "oracles.hpp"

using namespace kmsph;
using namespace kmsph::testing;

namespace {

GeneralizedCartanMatrix a1_affine() { return GeneralizedCartanMatrix::make(zm({{2, -2}, {-2, 2}})); }

GeneralizedCartanMatrix g2_affine() {
  return GeneralizedCartanMatrix::make(zm({{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}));
}

GeneralizedCartanMatrix a2_cycle() {
  return GeneralizedCartanMatrix::make(zm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

std::vector<int> all_nodes(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

TEST_CASE("gcm_violations accepts valid matrices") {
  CHECK(gcm_violations(zm({{2, -2}, {-2, 2}})).empty());
  CHECK(gcm_violations(zm({{2}})).empty());
  CHECK(gcm_violations(ZMat{}).empty());
}

TEST_CASE("gcm_violations flags each defect") {
  auto issues = gcm_violations(zm({{2, -1}, {0, 2}}));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == Errc::zero_asymmetry);
  CHECK(issues[0].i == 0);
  CHECK(issues[0].j == 1);

  issues = gcm_violations(zm({{1, 0}, {0, 2}}));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == Errc::diagonal_not_two);

  issues = gcm_violations(zm({{2, 1}, {1, 2}}));
  CHECK(issues.size() == 2);
  CHECK(issues[0].code == Errc::positive_off_diagonal);

  issues = gcm_violations(zm({{2, 0}, {0, 2}, {0, 0}}));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == Errc::not_square);
}

TEST_CASE("make rejects invalid matrices and labels") {
  CHECK(throws_errc([] { GeneralizedCartanMatrix::make(zm({{2, -1}, {0, 2}})); },
                    Errc::invariant_violation));
  CHECK(throws_errc([] { GeneralizedCartanMatrix::make(zm({{2}}), {"x", "y"}); },
                    Errc::invariant_violation));
  CHECK(throws_errc([] { GeneralizedCartanMatrix::make(zm({{2, 0}, {0, 2}}), {"x", "x"}); },
                    Errc::invariant_violation));
}

TEST_CASE("default and custom labels") {
  auto g = g2_affine();
  CHECK(g.labels() == std::vector<std::string>{"a0", "a1", "a2"});
  CHECK(g.index_of("a2") == 2);
  CHECK(throws_errc([&] { g.index_of("b0"); }, Errc::unknown_label));

  auto named = GeneralizedCartanMatrix::make(zm({{2, -1}, {-1, 2}}), {"x", "y"});
  CHECK(named.label(1) == "y");
  CHECK(named.index_of("y") == 1);
}

TEST_CASE("normalize_subset sorts, dedups, and bound-checks") {
  CHECK(normalize_subset(3, {2, 0, 2}) == std::vector<int>{0, 2});
  CHECK(normalize_subset(3, {}) == std::vector<int>{});
  CHECK(throws_errc([] { normalize_subset(3, {3}); }, Errc::invariant_violation));
  CHECK(throws_errc([] { normalize_subset(3, {-1}); }, Errc::invariant_violation));
}

TEST_CASE("connected components") {
  auto cycle = a2_cycle();
  CHECK(connected_components(cycle, {0, 2}) == std::vector<std::vector<int>>{{0, 2}});
  CHECK(connected_components(cycle, {}) == std::vector<std::vector<int>>{});
  CHECK(connected_components(cycle, {0, 1, 2}) == std::vector<std::vector<int>>{{0, 1, 2}});

  auto g = g2_affine();
  CHECK(connected_components(g, {0, 2}) == std::vector<std::vector<int>>{{0}, {2}});
}

TEST_CASE("principal submatrix keeps labels") {
  auto g = g2_affine();
  auto sub = principal_submatrix(g, {1, 2});
  CHECK(sub.matrix() == zm({{2, -1}, {-3, 2}}));
  CHECK(sub.labels() == std::vector<std::string>{"a1", "a2"});
}

TEST_CASE("finite type on small diagrams") {
  CHECK_FALSE(is_finite_type(a1_affine(), {0, 1}));
  CHECK(is_finite_type(a1_affine(), {0}));
  CHECK(is_finite_type(a1_affine(), {}));

  auto g = g2_affine();
  CHECK(is_finite_type(g, {0, 1}));
  CHECK(is_finite_type(g, {1, 2}));
  CHECK_FALSE(is_finite_type(g, {0, 1, 2}));

  CHECK_FALSE(is_finite_type(a2_cycle(), {0, 1, 2}));
  CHECK(is_finite_type(a2_cycle(), {0, 1}));
}

TEST_CASE("finite type on exceptional diagrams") {
  // E8: a path 0..6 with node 7 hanging off node 2.
  ZMat e8(8, ZVec(8, 0));
  for (int i = 0; i < 8; ++i) e8[i][i] = 2;
  auto edge = [&](int i, int j) { e8[i][j] = e8[j][i] = -1; };
  for (int i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(2, 7);
  auto g8 = GeneralizedCartanMatrix::make(e8);
  CHECK(is_finite_type(g8, all_nodes(8)));

  // Extending the long arm by one node gives the affine diagram.
  ZMat e9(9, ZVec(9, 0));
  for (int i = 0; i < 9; ++i) e9[i][i] = 2;
  auto edge9 = [&](int i, int j) { e9[i][j] = e9[j][i] = -1; };
  for (int i = 0; i + 1 < 8; ++i) edge9(i, i + 1);
  edge9(2, 8);
  auto g9 = GeneralizedCartanMatrix::make(e9);
  CHECK_FALSE(is_finite_type(g9, all_nodes(9)));

  auto f4 = GeneralizedCartanMatrix::make(
      zm({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  CHECK(is_finite_type(f4, all_nodes(4)));

  ZMat f4t(4, ZVec(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f4t[i][j] = f4.at(j, i);
  CHECK(is_finite_type(GeneralizedCartanMatrix::make(f4t), all_nodes(4)));

  auto g2 = GeneralizedCartanMatrix::make(zm({{2, -1}, {-3, 2}}));
  CHECK(is_finite_type(g2, {0, 1}));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix::make(zm({{2, -1}, {-4, 2}})), {0, 1}));
}

TEST_CASE("finite type agrees with the pattern matcher on all subsets") {
  std::vector<GeneralizedCartanMatrix> samples = {
      a1_affine(),
      g2_affine(),
      a2_cycle(),
      GeneralizedCartanMatrix::make(
          zm({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}})),
      GeneralizedCartanMatrix::make(
          zm({{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, -1},
              {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}})),
  };
  for (const auto& gcm : samples) {
    const int n = gcm.n();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) subset.push_back(i);
      CAPTURE(mask);
      CHECK(is_finite_type(gcm, subset) == dynkin_is_finite(gcm, subset));
    }
  }
}

TEST_CASE("finite type agrees with the pattern matcher on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto gcm = GeneralizedCartanMatrix::make(random_gcm(rng, 5));
    const int n = gcm.n();
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) subset.push_back(i);
    CAPTURE(trial);
    CHECK(is_finite_type(gcm, subset) == dynkin_is_finite(gcm, subset));
  }
}
