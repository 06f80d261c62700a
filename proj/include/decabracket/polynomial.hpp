#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "decabracket/multi_index.hpp"

namespace decabracket {

/// Graded-lexicographic order, larger monomials first (x0 > x1 > ...).
struct GradedLexGreater {
  bool operator()(const MultiIndex& lhs, const MultiIndex& rhs) const {
    const int dl = lhs.sum();
    const int dr = rhs.sum();
    if (dl != dr) return dl > dr;
    return lhs > rhs;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no stored zeros, graded-lex descending
/// iteration order. Every exponent is nonnegative.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables);

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(const MultiIndex& exponent, const Rational& c = 1);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& exponent) const;
  /// Adds c * x^exponent, dropping the term if it cancels.
  void add_term(const MultiIndex& exponent, const Rational& c);

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  bool has_integer_coefficients() const;

  Polynomial derivative(std::size_t index) const;
  /// Sets x_index = value and drops that variable from the ring.
  Polynomial eliminate_variable(std::size_t index, const Rational& value) const;
  /// Substitutes x_i -> x_{map[i]} in a ring with `variables` variables.
  Polynomial rename(const std::vector<std::size_t>& map, std::size_t variables) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  /// Renders with the given variable names, e.g. "-2*y110*y002 + y101^2".
  std::string to_string(const std::vector<std::string>& names) const;
  /// Renders with names x0, x1, ...
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t variables_ = 0;
  Terms terms_;
};

/// Default names "x0", "x1", ...
std::vector<std::string> indexed_names(std::string_view prefix, std::size_t count);

/// Exact decimal/fraction rendering of a rational ("-3", "1/2").
std::string to_string(const Rational& q);

}  // namespace decabracket
