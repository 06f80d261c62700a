#pragma once

// The ten Feigin-Odesskii bracket tables on P^5 = P(H^0(P^2, O(2))^*).
//
// Coordinates y_a on the ambient C^6 are indexed by a in Delta(2) in the
// canonical order y200, y110, y101, y020, y011, y002. A table labelled by a
// cubic F assigns to each pair of coordinates the quadratic form
// {y_a, y_b}_F; tables depend linearly on F.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "decabracket/bivector.hpp"
#include "decabracket/multi_index.hpp"
#include "decabracket/polynomial.hpp"

namespace decabracket {

inline constexpr std::size_t kCoordinates = 6;

/// Delta(2) in canonical order; position i is the coordinate y_i.
const std::vector<MultiIndex>& quadric_exponents();
/// Delta(3) in canonical order.
const std::vector<MultiIndex>& cubic_exponents();
/// Position of a in Delta(2); throws std::out_of_range otherwise.
std::size_t coordinate_index(const MultiIndex& a);
/// "y200", "y110", ... in coordinate order.
const std::vector<std::string>& coordinate_names();

/// 1 iff a'0 <= a0-1, a'1 > a1-1, a'1 <= a1+b1-1, a2+b2 < a'2+1,
/// c2+a2+b2 >= a'2+1, a'0+b'0 = a0+b0+c0-1 and a'1+b'1 = a1+b1+c1-1.
int rho_tilde(const MultiIndex& a, const MultiIndex& b, const MultiIndex& c, const MultiIndex& aprime,
              const MultiIndex& bprime);

/// 1 iff alpha + beta + a + b + c = (-1,-1,-1).
int delta_match(const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& a, const MultiIndex& b,
                const MultiIndex& c);

/// Coefficient of y_{a'} y_{b'} (ordered) in {y_a, y_b}_{x^c}:
/// sum over sigma in S3 permuting (a, b, c) of -sgn(sigma) rho_tilde(...).
int bracket_coefficient(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b, const MultiIndex& aprime,
                        const MultiIndex& bprime);

/// Same sum restricted to one permutation sigma of the letters (a, b, c).
int bracket_coefficient_for(const Permutation& sigma, const MultiIndex& c, const MultiIndex& a,
                            const MultiIndex& b, const MultiIndex& aprime, const MultiIndex& bprime);

/// {x^a, x^b}_{x^c} as a quadratic polynomial in the six coordinates.
Polynomial bracket_entry(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b);

/// Which m4 evaluation backs bracket_via_m4.
enum class M4Engine { closed_form, trees };

/// The same quadratic form obtained from <e, m4(F,s1,e,s2) - m4(s1,F,e,s2)>
/// with e = sum t_alpha x^alpha over Delta(-5), the Serre pairing
/// <x^a', x^beta> = [a' + beta = (-1,-1,-1)], and y_a' <-> t_{a'*}.
Polynomial bracket_via_m4(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b,
                          M4Engine engine = M4Engine::closed_form);

/// Skew table of quadratic forms for a cubic label F in x0, x1, x2.
class BracketTable {
 public:
  BracketTable() = default;
  BracketTable(Polynomial label, Bivector entries);

  /// The cubic F (three variables).
  const Polynomial& label() const { return label_; }
  /// Components indexed by coordinate positions.
  const Bivector& entries() const { return entries_; }
  Polynomial entry(const MultiIndex& a, const MultiIndex& b) const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  Polynomial label_;
  Bivector entries_;
};

/// Table for the monomial x^c, c in Delta(3).
BracketTable monomial_table(const MultiIndex& c);

/// All ten monomial tables in Delta(3) order (computed once).
const std::vector<BracketTable>& monomial_tables();

/// Table for a homogeneous cubic F; throws std::invalid_argument otherwise.
BracketTable bracket_table(const Polynomial& cubic);

/// The quadratic polynomial y_{a'} y_{b'} in the six coordinates.
Polynomial coordinate_product(const MultiIndex& aprime, const MultiIndex& bprime);

}  // namespace decabracket
