#include <gtest/gtest.h>

#include "decabracket/sweeps.hpp"

using namespace decabracket;

namespace {

const SweepOptions kSerial{Backend::serial, 0};
const SweepOptions kParallel{Backend::openmp, 3};

}  // namespace

TEST(Drivers, ReportLowestFailingIndex) {
  auto check = [](std::uint64_t i) -> std::optional<std::string> {
    if (i % 97 == 41) return "bad " + std::to_string(i);
    return std::nullopt;
  };
  const auto serial = run_serial(1000, check);
  EXPECT_EQ(serial.cases, 1000U);
  EXPECT_EQ(serial.failures, 10U);
  ASSERT_TRUE(serial.first_failure_index.has_value());
  EXPECT_EQ(*serial.first_failure_index, 41U);
  EXPECT_EQ(serial.first_failure, "bad 41");
  for (int jobs : {1, 2, 4}) EXPECT_EQ(run_openmp(1000, check, jobs), serial) << jobs;
}

TEST(Drivers, EmptyFamily) {
  auto never = [](std::uint64_t) -> std::optional<std::string> { return "unreachable"; };
  EXPECT_TRUE(run_serial(0, never).passed());
  EXPECT_TRUE(run_openmp(0, never).passed());
}

TEST(Sweeps, SerialAndParallelAgree) {
  EXPECT_EQ(homotopy_identity_sweep(2, 3, kSerial), homotopy_identity_sweep(2, 3, kParallel));
  EXPECT_EQ(cech_product_sweep(2, 2, 200, 5, kSerial), cech_product_sweep(2, 2, 200, 5, kParallel));
  EXPECT_EQ(rho_consistency_sweep(kSerial), rho_consistency_sweep(kParallel));
  EXPECT_EQ(bracket_oracle_sweep(M4Engine::closed_form, kSerial),
            bracket_oracle_sweep(M4Engine::closed_form, kParallel));
}

TEST(Sweeps, ExhaustiveCounts) {
  EXPECT_EQ(rho_consistency_sweep(kParallel).cases, 77760U);
  EXPECT_EQ(m4_equivalence_sweep(kParallel).cases, 8640U);
  EXPECT_EQ(bracket_oracle_sweep(M4Engine::trees, kParallel).cases, 360U);
}

TEST(Sweeps, HomotopySweepAtBoundFour) {
  const auto r = homotopy_identity_sweep(2, 4, kParallel);
  EXPECT_TRUE(r.passed()) << r.first_failure;
  EXPECT_EQ(r, homotopy_identity_sweep(2, 4, kSerial));
}
