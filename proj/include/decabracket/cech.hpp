#pragma once

// Cech dg-algebra of all twists O(q) on P^n for the standard affine cover
// U_i = {x_i != 0}, together with the homotopy-transfer data (iota, pi, Q).
//
// A cochain is stored in the basis x^e_I: the Laurent monomial x^e placed on
// the single increasing index tuple I, where I must contain every i with
// e_i < 0. Every operator maps the isotypic piece A(e) to itself except the
// product, which adds exponents.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decabracket/multi_index.hpp"
#include "decabracket/polynomial.hpp"

namespace decabracket {

/// Subset of {0,...,7} as a bitmask, iterated in increasing order.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint8_t mask) : mask_(mask) {}
  IndexSet(std::initializer_list<int> members);
  static IndexSet full(int n);  // {0,...,n}

  std::uint8_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  int min() const;
  int max() const;
  /// Number of members smaller than i.
  int position(int i) const;
  IndexSet with(int i) const { return IndexSet(static_cast<std::uint8_t>(mask_ | (1U << i))); }
  IndexSet without(int i) const { return IndexSet(static_cast<std::uint8_t>(mask_ & ~(1U << i))); }
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(IndexSet, IndexSet) = default;
  friend auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// x^e_I: the Laurent monomial x^e on the index tuple I.
struct CechBasis {
  IndexSet indices;
  MultiIndex exponent;

  int degree() const { return indices.size() - 1; }
  int twist() const { return exponent.sum(); }
  /// I contains every index with a negative exponent.
  bool is_regular() const;
  std::string to_string() const;

  friend bool operator==(const CechBasis&, const CechBasis&) = default;
  friend std::strong_ordering operator<=>(const CechBasis& lhs, const CechBasis& rhs);
};

/// Finite rational combination of basis elements x^e_I on P^n.
class CechElement {
 public:
  using Terms = std::map<CechBasis, Rational>;

  CechElement() = default;
  explicit CechElement(int n);
  static CechElement basis(int n, const CechBasis& b, const Rational& c = 1);

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const CechBasis& b) const;
  void add_term(const CechBasis& b, const Rational& c);

  CechElement degree_part(int p) const;
  CechElement twist_part(int q) const;
  /// The piece A(e).
  CechElement isotypic_part(const MultiIndex& e) const;

  CechElement& operator+=(const CechElement& other);
  CechElement& operator-=(const CechElement& other);
  CechElement& operator*=(const Rational& s);
  friend CechElement operator+(CechElement lhs, const CechElement& rhs) { return lhs += rhs; }
  friend CechElement operator-(CechElement lhs, const CechElement& rhs) { return lhs -= rhs; }
  friend CechElement operator*(const Rational& s, CechElement rhs) { return rhs *= s; }
  friend bool operator==(const CechElement&, const CechElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const CechElement& other) const;

  int n_ = 0;
  Terms terms_;
};

/// Element of H = H^0 + H^n: a polynomial in n+1 variables plus a
/// combination of x^alpha with every alpha_i < 0.
class HElement {
 public:
  using TopTerms = std::map<MultiIndex, Rational, LexGreater>;

  HElement() = default;
  explicit HElement(int n);
  static HElement from_polynomial(int n, const Polynomial& p);
  static HElement monomial(const MultiIndex& exponent, const Rational& c = 1);
  static HElement top_monomial(const MultiIndex& alpha, const Rational& c = 1);

  int ambient() const { return n_; }
  const Polynomial& degree_zero() const { return degree_zero_; }
  const TopTerms& top() const { return top_; }
  bool is_zero() const { return degree_zero_.is_zero() && top_.empty(); }
  /// 0 or n when the element is nonzero and homogeneous; nullopt otherwise.
  std::optional<int> degree() const;

  void add_top_term(const MultiIndex& alpha, const Rational& c);

  HElement& operator+=(const HElement& other);
  HElement& operator-=(const HElement& other);
  HElement& operator*=(const Rational& s);
  friend HElement operator+(HElement lhs, const HElement& rhs) { return lhs += rhs; }
  friend HElement operator-(HElement lhs, const HElement& rhs) { return lhs -= rhs; }
  friend HElement operator*(const Rational& s, HElement rhs) { return rhs *= s; }
  friend bool operator==(const HElement&, const HElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const HElement& other) const;

  int n_ = 0;
  Polynomial degree_zero_;
  TopTerms top_;
};

/// max{ i : e_i >= 0 }, or nullopt (the bottom value) when every e_i < 0.
std::optional<int> k_of(const MultiIndex& e);

/// Alternating-sum Cech differential; raises degree by one.
CechElement differential(const CechElement& x);

/// Cup product (xy)_{i0..i_{p+p'}} = x_{i0..ip} * y_{ip..i_{p+p'}}.
CechElement multiply(const CechElement& x, const CechElement& y);

/// Homotopy Q(x^e_I) = (-1)^j x^e_{I - k(e)} when k(e) = i_j in I, else 0.
CechElement homotopy(const CechElement& x);

/// iota: polynomials go to every U_k in degree 0, top classes to {0..n}.
/// Throws std::invalid_argument on an element mixing degrees 0 and n.
CechElement include(const HElement& h);

/// pi: degree 0 reads the U_n component when polynomial, degree n keeps the
/// all-negative terms on {0..n}, everything else maps to zero.
HElement project(const CechElement& x);

/// Every regular basis element of A on P^n with |e_i| <= bound.
std::vector<CechBasis> regular_basis(int n, int bound);

}  // namespace decabracket
