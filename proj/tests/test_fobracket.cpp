#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "decabracket/fobracket.hpp"
#include "decabracket/sweeps.hpp"

using namespace decabracket;

namespace {

const std::vector<std::string> kNames = {"y200", "y110", "y101", "y020", "y011", "y002"};

// Brute-force double sum, independent of the library's permutation helpers.
Polynomial bracket_oracle(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b) {
  const auto d2 = delta_set(2);
  const std::array<MultiIndex, 3> letters = {a, b, c};
  std::array<int, 3> order = {0, 1, 2};
  Polynomial out(6);
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += order[i] > order[j];
    const int sign = inversions % 2 ? -1 : 1;
    const MultiIndex& p = letters[order[0]];
    const MultiIndex& q = letters[order[1]];
    const MultiIndex& r = letters[order[2]];
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const MultiIndex& x = d2[i];
        const MultiIndex& y = d2[j];
        const bool ok = x[0] <= p[0] - 1 && x[1] >= p[1] && x[1] <= p[1] + q[1] - 1 && p[2] + q[2] <= x[2] &&
                        p[2] + q[2] + r[2] >= x[2] + 1 && x[0] + y[0] == p[0] + q[0] + r[0] - 1 &&
                        x[1] + y[1] == p[1] + q[1] + r[1] - 1;
        if (!ok) continue;
        MultiIndex e(6);
        e[i] += 1;
        e[j] += 1;
        out.add_term(e, -sign);
      }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace

TEST(Coordinates, CanonicalNames) {
  EXPECT_EQ(coordinate_names(), kNames);
  EXPECT_EQ(coordinate_index({0, 1, 1}), 4U);
  EXPECT_THROW(coordinate_index({1, 1, 1}), std::out_of_range);
}

TEST(RhoTilde, Examples) {
  EXPECT_EQ(rho_tilde({2, 0, 0}, {0, 2, 0}, {0, 0, 3}, {1, 1, 0}, {0, 0, 2}), 1);
  for (const auto& ap : delta_set(2))
    for (const auto& bp : delta_set(2)) EXPECT_EQ(rho_tilde({0, 2, 0}, {2, 0, 0}, {0, 0, 3}, ap, bp), 0);
}

TEST(DeltaMatch, Examples) {
  EXPECT_EQ(delta_match({-2, -2, -1}, {-1, -1, -3}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}), 1);
  EXPECT_EQ(delta_match({-2, -2, -1}, {-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}), 0);
}

TEST(BracketEntry, GoldenExample) {
  const Polynomial e = bracket_entry({0, 0, 3}, {2, 0, 0}, {0, 2, 0});
  EXPECT_EQ(e.to_string(kNames), "-2*y110*y002 - 2*y101*y011");
  EXPECT_EQ(e, -2 * coordinate_product({1, 1, 0}, {0, 0, 2}) - 2 * coordinate_product({1, 0, 1}, {0, 1, 1}));
}

TEST(BracketEntry, MatchesBruteForceOracle) {
  for (const auto& c : delta_set(3))
    for (const auto& a : delta_set(2))
      for (const auto& b : delta_set(2)) EXPECT_EQ(bracket_entry(c, a, b), bracket_oracle(c, a, b));
}

TEST(BracketEntry, DiagonalVanishes) {
  for (const auto& c : delta_set(3))
    for (const auto& a : delta_set(2)) EXPECT_TRUE(bracket_entry(c, a, a).is_zero());
}

TEST(BracketEntry, PermutationContributionsForZeroZeroThree) {
  // Only the identity contributes to the golden example.
  const auto s3 = all_permutations(3);
  const MultiIndex c{0, 0, 3}, a{2, 0, 0}, b{0, 2, 0};
  int surviving_pairs = 0;
  for (const auto& sigma : s3)
    for (const auto& ap : delta_set(2))
      for (const auto& bp : delta_set(2)) {
        const int v = bracket_coefficient_for(sigma, c, a, b, ap, bp);
        if (sigma != Permutation::identity(3)) EXPECT_EQ(v, 0);
        else surviving_pairs += v != 0;
      }
  EXPECT_EQ(surviving_pairs, 4);
}

TEST(BracketViaM4, AgreesWithFormulaForBothEngines) {
  const SweepOptions serial{Backend::serial, 0};
  const auto closed = bracket_oracle_sweep(M4Engine::closed_form, serial);
  EXPECT_EQ(closed.cases, 360U);
  EXPECT_TRUE(closed.passed()) << closed.first_failure;
  const auto trees = bracket_oracle_sweep(M4Engine::trees, serial);
  EXPECT_TRUE(trees.passed()) << trees.first_failure;
}

TEST(RhoTilde, ConsistentWithRho) {
  const auto r = rho_consistency_sweep(SweepOptions{Backend::serial, 0});
  EXPECT_EQ(r.cases, 77760U);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(BracketTable, MonomialTablesAreIntegralAndLinear) {
  const auto& tables = monomial_tables();
  ASSERT_EQ(tables.size(), 10U);
  for (std::size_t t = 0; t < tables.size(); ++t) {
    EXPECT_EQ(tables[t].label(), Polynomial::monomial(delta_set(3)[t]));
    EXPECT_EQ(bracket_table(tables[t].label()), tables[t]);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) EXPECT_TRUE(tables[t].entries().upper(i, j).has_integer_coefficients());
  }
}

TEST(BracketTable, FermatCubicIsSumOfThreeTables) {
  Polynomial f(3);
  f.add_term({3, 0, 0}, 1);
  f.add_term({0, 3, 0}, 1);
  f.add_term({0, 0, 3}, 1);
  const BracketTable t = bracket_table(f);
  const Bivector expected = monomial_table({3, 0, 0}).entries() + monomial_table({0, 3, 0}).entries() +
                            monomial_table({0, 0, 3}).entries();
  EXPECT_EQ(t.entries(), expected);
  EXPECT_EQ(t.entry({2, 0, 0}, {0, 2, 0}),
            bracket_entry({3, 0, 0}, {2, 0, 0}, {0, 2, 0}) + bracket_entry({0, 3, 0}, {2, 0, 0}, {0, 2, 0}) +
                bracket_entry({0, 0, 3}, {2, 0, 0}, {0, 2, 0}));
}

TEST(BracketTable, ZeroCubicGivesZeroTable) {
  const BracketTable t = bracket_table(Polynomial(3));
  EXPECT_TRUE(t.entries().is_zero());
}

TEST(BracketTable, RejectsBadInput) {
  EXPECT_THROW(monomial_table({1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(bracket_table(Polynomial::monomial({2, 0, 0})), std::invalid_argument);
  EXPECT_THROW(bracket_table(Polynomial::monomial({1, 1, 1, 0})), std::invalid_argument);
}
