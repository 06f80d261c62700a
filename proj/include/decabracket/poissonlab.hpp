#pragma once

// Verification calculus for quadratic bivectors on the ambient space of a
// projective space: Jacobiators, restriction to the standard affine charts,
// equality modulo Euler wedges, rank and permutation equivariance.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "decabracket/bivector.hpp"
#include "decabracket/fobracket.hpp"

namespace decabracket {

/// A bivector on the chart y_chart = 1, in the remaining dim-1 coordinates
/// u_i = y_i / y_chart (kept in their original relative order).
struct ChartBivector {
  std::size_t chart = 0;
  Bivector components;
};

/// The bivector Pi^{ij} = {y_i, y_j} of a table.
Bivector bivector_of(const BracketTable& table);

/// Pi~^{ij}(u) = Pi^{ij} - u_i Pi^{mj} - u_j Pi^{im} at y_m = 1.
/// Throws std::invalid_argument unless every component is a homogeneous quadric.
ChartBivector chart_restrict(const Bivector& pi, std::size_t chart);

/// J^{ijk} = sum_l (Pi^{il} d_l Pi^{jk} + Pi^{jl} d_l Pi^{ki} + Pi^{kl} d_l Pi^{ij}).
Trivector jacobiator(const Bivector& pi);

/// J(P1 + P2) - J(P1) - J(P2).
Trivector mixed_jacobiator(const Bivector& p1, const Bivector& p2);

/// Where a Jacobi check failed.
struct JacobiWitness {
  std::size_t chart = 0;
  std::array<std::size_t, 3> component{};  // chart-local indices
  Polynomial value;

  std::string describe() const;
};

struct PoissonCheck {
  bool holds = true;
  std::optional<JacobiWitness> witness;

  explicit operator bool() const { return holds; }
};

/// Chart Jacobiators vanish identically on every affine chart.
PoissonCheck is_poisson_on_P5(const Bivector& pi);

/// Mixed chart Jacobiators vanish identically on every chart.
PoissonCheck is_compatible_on_P5(const Bivector& p1, const Bivector& p2);

/// Whether d^{ij} = y_i V^j - y_j V^i for some linear V (exact linear solve).
bool is_euler_wedge(const Bivector& d);

/// Whether every chart restriction of d is zero.
bool vanishes_on_charts(const Bivector& d);

/// Whether J^{ijk} = y_i W^{jk} + y_j W^{ki} + y_k W^{ij} for some skew
/// quadratic W (exact linear solve). Requires cubic components.
bool is_euler_wedge(const Trivector& j);

/// Outcome of both projective-equality routes.
struct ProjectiveComparison {
  bool linear_route = false;
  bool chart_route = false;

  bool routes_agree() const { return linear_route == chart_route; }
};

ProjectiveComparison compare_projective(const Bivector& p1, const Bivector& p2);

/// P1 and P2 induce the same bivector on projective space. Throws
/// std::logic_error if the two routes ever disagree.
bool projective_equal(const Bivector& p1, const Bivector& p2);

/// Rank of the tables' coefficient vectors (component pair x monomial).
std::size_t rank_of_family(std::span<const BracketTable> tables);

/// Rank of the induced bivectors on projective space: the rank of the tables
/// modulo the span of all Euler wedges E ^ V.
std::size_t projective_rank_of_family(std::span<const BracketTable> tables);

/// Relabels the label c -> sigma.c and the coordinates y_a -> y_{sigma.a},
/// sigma acting on exponent positions.
BracketTable permute_action(const Permutation& sigma, const BracketTable& table);

}  // namespace decabracket
