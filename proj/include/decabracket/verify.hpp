#pragma once

// Named verification checks and the suites that group them.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "decabracket/sweeps.hpp"

namespace decabracket {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string witness;  // first counterexample, empty when passed
  std::string note;     // extra findings that do not affect the status
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;

  bool all_passed() const;
  std::string render_text() const;
  /// Wall times are included, so this is not byte-stable.
  nlohmann::ordered_json to_json() const;
};

enum class Suite { all, cech, ainf, tables, poisson };

/// "all", "cech", "ainf", "tables", "poisson"; std::invalid_argument otherwise.
Suite parse_suite(std::string_view text);

VerifyReport run_suite(Suite suite, const SweepOptions& options = {});

namespace checks {

CheckOutcome homotopy_identities(int n, int bound, const SweepOptions& options = {});
CheckOutcome cech_products(int n, int bound, std::uint64_t samples, const SweepOptions& options = {});
CheckOutcome tree_enumeration();
CheckOutcome m4_equivalence(const SweepOptions& options = {});
CheckOutcome rho_consistency(const SweepOptions& options = {});
CheckOutcome bracket_oracle(M4Engine engine, const SweepOptions& options = {});
/// {a,b} = -{b,a}, {a,a} = 0, and a'+b' = a+b+c-(1,1,1) for every term.
CheckOutcome skew_and_grading();
CheckOutcome integer_coefficients();
/// For c=(0,0,3) only sigma in {id, (a b)} contribute; for c=(1,2,0) those two
/// contribute nothing. Both allowed families must also be nonzero somewhere.
CheckOutcome permutation_support();
CheckOutcome jacobi_on_charts(const SweepOptions& options = {});
CheckOutcome compatibility_on_charts(const SweepOptions& options = {});
CheckOutcome random_pencils(std::uint64_t count, std::uint64_t seed);
CheckOutcome fermat_cubic();
CheckOutcome linear_independence();
CheckOutcome projective_independence();
/// Some ambient Jacobiator is nonzero while its chart Jacobiators vanish.
CheckOutcome ambient_negative_control();
/// Every ambient Jacobiator is E ^ W for a quadratic W.
CheckOutcome ambient_jacobiators_are_euler_wedges();

enum class Twist { none, sign };

/// permute_action(sigma, T_c) projectively equals sgn(sigma)^k * T_{sigma.c}
/// (k = 0 for Twist::none, 1 for Twist::sign), for all sigma and c; the two
/// projective_equal routes must also agree on every instance.
CheckOutcome projective_equivariance(Twist twist);
/// Informational: exact ambient equality with and without the sign twist.
CheckOutcome ambient_equivariance();
/// A table with one perturbed entry is rejected with a witness.
CheckOutcome detects_corruption();

}  // namespace checks

}  // namespace decabracket
