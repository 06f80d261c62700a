#include <gtest/gtest.h>

#include <array>
#include <set>

#include "decabracket/ainf.hpp"
#include "decabracket/fobracket.hpp"
#include "decabracket/sweeps.hpp"

using namespace decabracket;

namespace {

std::array<HElement, 4> efgh(const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c) {
  return {HElement::top_monomial(alpha), HElement::monomial(a), HElement::monomial(b), HElement::monomial(c)};
}

// rho straight from the five inequalities, written out independently.
int rho_oracle(const MultiIndex& al, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c) {
  const bool first = al[0] + a[0] >= 0;
  const bool second = al[1] + a[1] < 0 && al[1] + a[1] + b[1] >= 0;
  const bool third = al[2] + a[2] + b[2] < 0 && al[2] + a[2] + b[2] + c[2] >= 0;
  return first && second && third ? 1 : 0;
}

}  // namespace

TEST(PlantedTree, CatalanCounts) {
  const std::array<std::size_t, 6> catalan = {1, 1, 2, 5, 14, 42};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto trees = binary_trees(n);
    EXPECT_EQ(trees.size(), catalan[n - 1]) << n;
    std::set<std::string> shapes;
    for (const auto& t : trees) shapes.insert(t.to_string());
    EXPECT_EQ(shapes.size(), trees.size());
  }
}

TEST(PlantedTree, NamedFourLeafTrees) {
  const auto& t = four_leaf_trees();
  EXPECT_EQ(t[0].to_string(), "((x1(x2x3))x4)");
  EXPECT_EQ(t[1].to_string(), "(x1((x2x3)x4))");
  EXPECT_EQ(t[2].to_string(), "(x1(x2(x3x4)))");
  EXPECT_EQ(t[3].to_string(), "((x1x2)(x3x4))");
  EXPECT_EQ(t[4].to_string(), "(((x1x2)x3)x4)");
  const std::array<int, 5> signs = {-1, 1, -1, 1, 1};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(t[i].sign(), signs[i]) << t[i].to_string();
}

TEST(EvalTree, T5Example) {
  const auto args = efgh({-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3});
  EXPECT_EQ(eval_tree(four_leaf_trees()[4], args), HElement::monomial({0, 0, 2}));
  EXPECT_TRUE(eval_tree(four_leaf_trees()[0], args).is_zero());
}

TEST(EvalTree, T5VanishesWhenFirstConditionFails) {
  for (const auto& b : delta_set(2))
    for (const auto& c : delta_set(3)) {
      const auto args = efgh({-1, -3, -1}, {0, 2, 0}, b, c);
      EXPECT_TRUE(eval_tree(four_leaf_trees()[4], args).is_zero());
    }
}

TEST(EvalTree, RejectsTwoTopArguments) {
  const std::array<HElement, 4> args = {HElement::top_monomial({-2, -2, -1}), HElement::top_monomial({-1, -1, -3}),
                                        HElement::monomial({1, 0, 0}), HElement::monomial({0, 1, 0})};
  EXPECT_THROW(eval_tree(four_leaf_trees()[4], args), OutOfScopeError);
  EXPECT_THROW(m4_tree(args), OutOfScopeError);
  EXPECT_THROW(eval_tree(four_leaf_trees()[4], std::span<const HElement>(args).first(3)), std::invalid_argument);
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho({-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}), 1);
  EXPECT_EQ(rho({-1, -3, -1}, {1, 1, 0}, {0, 2, 0}, {1, 0, 2}), 1);
  for (const auto& b : delta_set(2))
    for (const auto& c : delta_set(3)) EXPECT_EQ(rho({-3, -1, -1}, {2, 0, 0}, b, c), 0);
}

TEST(Rho, MatchesInequalityOracle) {
  for (const auto& al : delta_set(-5))
    for (const auto& a : delta_set(2))
      for (const auto& b : delta_set(2))
        for (const auto& c : delta_set(3)) {
          EXPECT_EQ(rho(al, a, b, c), rho_oracle(al, a, b, c));
          EXPECT_EQ(rho(al, a, c, b), rho_oracle(al, a, c, b));
        }
}

TEST(M4Closed, Examples) {
  const M4Value v = m4_closed(M4Ordering::efgh, {-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3});
  EXPECT_EQ(v.coefficient, -1);
  EXPECT_EQ(v.exponent, (MultiIndex{0, 0, 2}));
  EXPECT_EQ(v.as_element(), HElement::monomial({0, 0, 2}, -1));
  EXPECT_EQ(m4_closed(M4Ordering::fghe, {-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}).coefficient, 0);
  EXPECT_TRUE(m4_closed(M4Ordering::fghe, {-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}).as_element().is_zero());
}

TEST(M4Closed, ZeroWhenLastInequalityFails) {
  for (auto ordering : kAllOrderings)
    for (const auto& al : delta_set(-5))
      for (const auto& a : delta_set(2))
        for (const auto& b : delta_set(2))
          for (const auto& c : delta_set(3)) {
            const MultiIndex total = al + a + b + c;
            if (total[2] < 0) EXPECT_EQ(m4_closed(ordering, al, a, b, c).coefficient, 0);
          }
}

TEST(M4Closed, RejectsMalformedData) {
  EXPECT_THROW(m4_closed(M4Ordering::efgh, {1, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}), std::invalid_argument);
  EXPECT_THROW(m4_closed(M4Ordering::efgh, {-2, -2, -1}, {2, -1, 0}, {0, 2, 0}, {0, 0, 3}), std::invalid_argument);
  EXPECT_THROW(parse_ordering("eghf"), std::invalid_argument);
  EXPECT_EQ(parse_ordering("fgeh"), M4Ordering::fgeh);
}

TEST(M4Tree, EfghOnlyT5Contributes) {
  const auto args = efgh({-2, -2, -1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3});
  const auto& trees = four_leaf_trees();
  for (std::size_t t = 0; t < 4; ++t) EXPECT_TRUE(eval_tree(trees[t], args).is_zero()) << t;
  EXPECT_EQ(m4_tree(args), HElement::monomial({0, 0, 2}, -1));
}

TEST(M4Tree, EquivalentToClosedFormEverywhere) {
  const auto r = m4_equivalence_sweep(SweepOptions{Backend::serial, 0});
  EXPECT_EQ(r.cases, 8640U);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(M4Tree, WorksOnPolynomialCombinations) {
  // m4 is multilinear: sum of two H^0 inputs gives the sum of the outputs.
  const MultiIndex alpha{-2, -2, -1};
  HElement f = HElement::monomial({2, 0, 0}) + HElement::monomial({1, 1, 0}, 3);
  const std::array<HElement, 4> args = {HElement::top_monomial(alpha), f, HElement::monomial({0, 2, 0}),
                                        HElement::monomial({0, 0, 3})};
  const HElement expected = m4_tree(M4Ordering::efgh, alpha, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}) +
                            Rational(3) * m4_tree(M4Ordering::efgh, alpha, {1, 1, 0}, {0, 2, 0}, {0, 0, 3});
  EXPECT_EQ(m4_tree(args), expected);
}
