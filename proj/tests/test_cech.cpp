#include <gtest/gtest.h>

#include "decabracket/cech.hpp"
#include "decabracket/sweeps.hpp"

using namespace decabracket;

namespace {

CechElement basis(IndexSet indices, MultiIndex exponent, const Rational& c = 1) {
  const int n = static_cast<int>(exponent.size()) - 1;
  return CechElement::basis(n, CechBasis{indices, exponent}, c);
}

}  // namespace

TEST(KOf, Examples) {
  EXPECT_EQ(k_of({-1, 2, -3}), 1);
  EXPECT_EQ(k_of({-1, -1, -3}), std::nullopt);
  EXPECT_EQ(k_of({0, 0, 0}), 2);
}

TEST(CechBasis, RegularityIsEnforced) {
  EXPECT_NO_THROW(basis({0, 1}, {0, -1, 0}));
  EXPECT_THROW(basis({0}, {0, -1, 0}), std::invalid_argument);  // x1 not inverted on U0
  EXPECT_EQ(CechBasis({{0, 2}, {1, 2, -1}}).degree(), 1);
  EXPECT_EQ(CechBasis({{0, 2}, {1, 2, -1}}).twist(), 2);
}

TEST(Differential, SignConvention) {
  const CechElement x = basis({0}, {1, 1, 0});
  const CechElement expected = basis({0, 1}, {1, 1, 0}, -1) + basis({0, 2}, {1, 1, 0}, -1);
  EXPECT_EQ(differential(x), expected);
  EXPECT_TRUE(differential(basis({0, 1, 2}, {-1, -2, -2})).is_zero());
  EXPECT_TRUE(differential(differential(basis({2}, {2, 0, -1}))).is_zero());
}

TEST(Multiply, OverlapRule) {
  // iota_0(x^{200}) times a top class.
  EXPECT_EQ(multiply(basis({0}, {2, 0, 0}), basis({0, 1, 2}, {-2, -2, -1})), basis({0, 1, 2}, {0, -2, -1}));
  EXPECT_EQ(multiply(basis({0, 1}, {0, -1, 0}), basis({1, 2}, {0, 0, -1})), basis({0, 1, 2}, {0, -1, -1}));
  EXPECT_TRUE(multiply(basis({0, 1}, {0, -1, 0}), basis({0, 1}, {0, -1, 0})).is_zero());
  EXPECT_TRUE(multiply(basis({1}, {0, 0, 0}), basis({0, 1}, {0, 0, 0})).is_zero());
}

TEST(Homotopy, Examples) {
  EXPECT_EQ(homotopy(basis({0, 1, 2}, {-1, 2, -3})), basis({0, 2}, {-1, 2, -3}, -1));
  EXPECT_EQ(homotopy(basis({0, 1, 2}, {2, -1, -1})), basis({1, 2}, {2, -1, -1}));
  EXPECT_TRUE(homotopy(basis({0, 1}, {-1, -1, 3})).is_zero());
  EXPECT_TRUE(homotopy(basis({0, 1, 2}, {-1, -1, -3})).is_zero());  // bottom
  EXPECT_TRUE(homotopy(basis({2}, {0, 0, 1})).is_zero());         // |I| = 1
}

TEST(IncludeProject, Examples) {
  const HElement p = HElement::monomial({1, 1, 0});
  EXPECT_EQ(project(include(p)), p);
  EXPECT_TRUE(project(basis({0, 1, 2}, {1, -2, -2})).is_zero());
  EXPECT_EQ(project(basis({0, 1, 2}, {-1, -2, -2})), HElement::top_monomial({-1, -2, -2}));
  // The polynomial lands on every single-index slot.
  const CechElement img = include(p);
  EXPECT_EQ(img.terms().size(), 3U);
}

TEST(IncludeProject, MixedDegreeInputIsRejected) {
  HElement mixed = HElement::monomial({1, 0, 0}) + HElement::top_monomial({-1, -1, -1});
  EXPECT_EQ(mixed.degree(), std::nullopt);
  EXPECT_THROW(include(mixed), std::invalid_argument);
}

TEST(CechSweeps, HomotopyIdentitiesHoldAcrossDimensions) {
  const SweepOptions serial{Backend::serial, 0};
  for (auto [n, bound] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 1}}) {
    const auto r = homotopy_identity_sweep(n, bound, serial);
    EXPECT_TRUE(r.passed()) << "n=" << n << ": " << r.first_failure;
    EXPECT_GT(r.cases, 0U);
  }
}

TEST(CechSweeps, ProductLaws) {
  const auto r = cech_product_sweep(2, 2, 300, 1, SweepOptions{Backend::serial, 0});
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(CechElement, TwistAndIsotypicParts) {
  const CechElement x = basis({0}, {2, 0, 0}) + basis({1, 2}, {0, -1, 0}) + basis({0, 1}, {-1, -1, 0});
  EXPECT_EQ(x.twist_part(2), basis({0}, {2, 0, 0}));
  EXPECT_EQ(x.degree_part(1), basis({1, 2}, {0, -1, 0}) + basis({0, 1}, {-1, -1, 0}));
  EXPECT_EQ(x.isotypic_part({0, -1, 0}), basis({1, 2}, {0, -1, 0}));
}
