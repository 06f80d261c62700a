#pragma once

// Exhaustive verification sweeps.
//
// Every sweep is an indexed family of independent cases. Two drivers run a
// family: a plain serial loop, kept as the reference, and an OpenMP loop.
// Both report the same SweepResult for the same family: the case count, the
// number of failing cases, and the lowest failing index with its message.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "decabracket/bivector.hpp"
#include "decabracket/fobracket.hpp"

namespace decabracket {

enum class Backend { serial, openmp };

struct SweepOptions {
  Backend backend = Backend::openmp;
  int jobs = 0;  // 0: OpenMP runtime default
};

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure_index;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Returns a failure description for case i, or nullopt when it passes.
using CaseCheck = std::function<std::optional<std::string>(std::uint64_t)>;

SweepResult run_serial(std::uint64_t count, const CaseCheck& check);
SweepResult run_openmp(std::uint64_t count, const CaseCheck& check, int jobs = 0);
SweepResult run_sweep(std::uint64_t count, const CaseCheck& check, const SweepOptions& options);

/// Whether the library was built with OpenMP.
bool openmp_enabled();

/// Over every regular basis element on P^n with |e_i| <= bound:
/// d^2 = 0, Q^2 = 0, pi Q = 0, id - iota pi = dQ + Qd, and on the H basis
/// elements among them pi iota = id and Q iota = 0.
SweepResult homotopy_identity_sweep(int n, int bound, const SweepOptions& options = {});

/// Random pairs and triples of basis elements (|e_i| <= bound), seeded per
/// case: graded Leibniz rule, associativity and twist additivity of mu.
SweepResult cech_product_sweep(int n, int bound, std::uint64_t samples, std::uint64_t seed,
                               const SweepOptions& options = {});

/// m4_tree == m4_closed over all four orderings and
/// Delta(-5) x Delta(2) x Delta(2) x Delta(3); in the efgh ordering also
/// checks that T1..T4 evaluate to zero individually.
SweepResult m4_equivalence_sweep(const SweepOptions& options = {});

/// rho_tilde(sigma a, sigma b, sigma c, alpha*, beta*) =
/// rho(alpha; sigma a, sigma b, sigma c) * delta(alpha, beta, a, b, c).
SweepResult rho_consistency_sweep(const SweepOptions& options = {});

/// bracket_via_m4 == bracket_entry over all (c, a, b).
SweepResult bracket_oracle_sweep(M4Engine engine, const SweepOptions& options = {});

/// Chart Jacobiator of every bivector on every chart is zero.
SweepResult chart_jacobi_sweep(std::span<const Bivector> bivectors, const SweepOptions& options = {});

/// Mixed chart Jacobiator of every unordered pair on every chart is zero.
SweepResult chart_compatibility_sweep(std::span<const Bivector> bivectors, const SweepOptions& options = {});

}  // namespace decabracket
