#include "decabracket/fobracket.hpp"

#include <array>
#include <stdexcept>

#include "decabracket/ainf.hpp"

namespace decabracket {

const std::vector<MultiIndex>& quadric_exponents() {
  static const std::vector<MultiIndex> d2 = delta_set(2);
  return d2;
}

const std::vector<MultiIndex>& cubic_exponents() {
  static const std::vector<MultiIndex> d3 = delta_set(3);
  return d3;
}

std::size_t coordinate_index(const MultiIndex& a) {
  const auto& d2 = quadric_exponents();
  for (std::size_t i = 0; i < d2.size(); ++i)
    if (d2[i] == a) return i;
  throw std::out_of_range("coordinate_index: " + a.to_string() + " is not in Delta(2)");
}

const std::vector<std::string>& coordinate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& a : quadric_exponents()) out.push_back("y" + a.compact());
    return out;
  }();
  return names;
}

int rho_tilde(const MultiIndex& a, const MultiIndex& b, const MultiIndex& c, const MultiIndex& aprime,
              const MultiIndex& bprime) {
  return aprime[0] <= a[0] - 1 && aprime[1] > a[1] - 1 && aprime[1] <= a[1] + b[1] - 1 &&
                 a[2] + b[2] < aprime[2] + 1 && c[2] + a[2] + b[2] >= aprime[2] + 1 &&
                 aprime[0] + bprime[0] == a[0] + b[0] + c[0] - 1 && aprime[1] + bprime[1] == a[1] + b[1] + c[1] - 1
             ? 1
             : 0;
}

int delta_match(const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& a, const MultiIndex& b,
                const MultiIndex& c) {
  const MultiIndex total = alpha + beta + a + b + c;
  for (int v : total)
    if (v != -1) return 0;
  return 1;
}

int bracket_coefficient_for(const Permutation& sigma, const MultiIndex& c, const MultiIndex& a,
                            const MultiIndex& b, const MultiIndex& aprime, const MultiIndex& bprime) {
  const std::array<const MultiIndex*, 3> letters = {&a, &b, &c};
  return -sigma.sign() *
         rho_tilde(*letters[sigma(0)], *letters[sigma(1)], *letters[sigma(2)], aprime, bprime);
}

int bracket_coefficient(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b, const MultiIndex& aprime,
                        const MultiIndex& bprime) {
  static const std::vector<Permutation> s3 = all_permutations(3);
  int sum = 0;
  for (const auto& sigma : s3) sum += bracket_coefficient_for(sigma, c, a, b, aprime, bprime);
  return sum;
}

Polynomial coordinate_product(const MultiIndex& aprime, const MultiIndex& bprime) {
  MultiIndex e(kCoordinates);
  e[coordinate_index(aprime)] += 1;
  e[coordinate_index(bprime)] += 1;
  return Polynomial::monomial(e);
}

Polynomial bracket_entry(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b) {
  Polynomial out(kCoordinates);
  for (const auto& ap : quadric_exponents()) {
    for (const auto& bp : quadric_exponents()) {
      const int coeff = bracket_coefficient(c, a, b, ap, bp);
      if (coeff == 0) continue;
      MultiIndex e(kCoordinates);
      e[coordinate_index(ap)] += 1;
      e[coordinate_index(bp)] += 1;
      out.add_term(e, coeff);
    }
  }
  return out;
}

namespace {

// Pairs the H^0(O(2)) value produced by e_alpha against e: x^gamma meets
// t_{gamma*}, so each term contributes coefficient * y_{alpha*} * y_gamma.
void accumulate_pairing(Polynomial& out, const MultiIndex& alpha, const Polynomial& value) {
  for (const auto& [gamma, coeff] : value.terms()) {
    // Only gamma in Delta(2) pairs nontrivially with H^2(O(-5)).
    if (gamma.sum() != 2) continue;
    MultiIndex e(kCoordinates);
    e[coordinate_index(star(alpha))] += 1;
    e[coordinate_index(gamma)] += 1;
    out.add_term(e, coeff);
  }
}

}  // namespace

Polynomial bracket_via_m4(const MultiIndex& c, const MultiIndex& a, const MultiIndex& b, M4Engine engine) {
  Polynomial out(kCoordinates);
  for (const auto& alpha : delta_set(-5)) {
    // m4(F, s1, e, s2) - m4(s1, F, e, s2) with F = x^c, s1 = x^a, s2 = x^b.
    Polynomial value(3);
    if (engine == M4Engine::closed_form) {
      const M4Value first = m4_closed(M4Ordering::fgeh, alpha, c, a, b);
      const M4Value second = m4_closed(M4Ordering::fgeh, alpha, a, c, b);
      value += first.as_element().degree_zero();
      value -= second.as_element().degree_zero();
    } else {
      value += m4_tree(M4Ordering::fgeh, alpha, c, a, b).degree_zero();
      value -= m4_tree(M4Ordering::fgeh, alpha, a, c, b).degree_zero();
    }
    accumulate_pairing(out, alpha, value);
  }
  return out;
}

BracketTable::BracketTable(Polynomial label, Bivector entries)
    : label_(std::move(label)), entries_(std::move(entries)) {
  if (label_.variables() != 3) throw std::invalid_argument("BracketTable: label must be a polynomial in x0, x1, x2");
  if (entries_.dim() != kCoordinates || entries_.variables() != kCoordinates)
    throw std::invalid_argument("BracketTable: entries must be a 6x6 array over six coordinates");
}

Polynomial BracketTable::entry(const MultiIndex& a, const MultiIndex& b) const {
  return entries_(coordinate_index(a), coordinate_index(b));
}

BracketTable monomial_table(const MultiIndex& c) {
  if (c.size() != 3 || !c.all_nonnegative() || c.sum() != 3)
    throw std::invalid_argument("monomial_table: label " + c.to_string() + " is not in Delta(3)");
  const auto& d2 = quadric_exponents();
  Bivector entries(kCoordinates, kCoordinates);
  for (std::size_t i = 0; i < d2.size(); ++i)
    for (std::size_t j = i + 1; j < d2.size(); ++j) entries.set(i, j, bracket_entry(c, d2[i], d2[j]));
  return BracketTable(Polynomial::monomial(c), std::move(entries));
}

const std::vector<BracketTable>& monomial_tables() {
  static const std::vector<BracketTable> tables = [] {
    std::vector<BracketTable> out;
    for (const auto& c : cubic_exponents()) out.push_back(monomial_table(c));
    return out;
  }();
  return tables;
}

BracketTable bracket_table(const Polynomial& cubic) {
  if (cubic.variables() != 3) throw std::invalid_argument("bracket_table: F must be a polynomial in x0, x1, x2");
  if (!cubic.is_homogeneous(3)) throw std::invalid_argument("bracket_table: F must be homogeneous of degree 3");
  Bivector entries(kCoordinates, kCoordinates);
  const auto& tables = monomial_tables();
  const auto& d3 = cubic_exponents();
  for (std::size_t t = 0; t < d3.size(); ++t) {
    const Rational lambda = cubic.coefficient(d3[t]);
    if (sgn(lambda) != 0) entries += lambda * tables[t].entries();
  }
  return BracketTable(cubic, std::move(entries));
}

}  // namespace decabracket
