#pragma once

#include <cstddef>
#include <vector>

#include "decabracket/polynomial.hpp"

namespace decabracket {

/// Skew-symmetric dim x dim array of polynomials; only i < j is stored.
class Bivector {
 public:
  Bivector() = default;
  /// Zero bivector; components live in a ring with `variables` variables.
  Bivector(std::size_t dim, std::size_t variables);

  std::size_t dim() const { return dim_; }
  std::size_t variables() const { return variables_; }

  /// Pi^{ij}; negated for i > j, zero on the diagonal.
  Polynomial operator()(std::size_t i, std::size_t j) const;
  /// Sets Pi^{ij} (and implicitly Pi^{ji} = -Pi^{ij}). Requires i != j.
  void set(std::size_t i, std::size_t j, Polynomial p);
  /// Stored component for i < j, no copy.
  const Polynomial& upper(std::size_t i, std::size_t j) const;

  bool is_zero() const;

  Bivector& operator+=(const Bivector& other);
  Bivector& operator-=(const Bivector& other);
  Bivector& operator*=(const Rational& s);
  friend Bivector operator+(Bivector lhs, const Bivector& rhs) { return lhs += rhs; }
  friend Bivector operator-(Bivector lhs, const Bivector& rhs) { return lhs -= rhs; }
  friend Bivector operator*(const Rational& s, Bivector rhs) { return rhs *= s; }
  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  void check_compatible(const Bivector& other) const;

  std::size_t dim_ = 0;
  std::size_t variables_ = 0;
  std::vector<Polynomial> upper_;
};

/// Alternating 3-index array of polynomials; only i < j < k is stored.
class Trivector {
 public:
  Trivector() = default;
  Trivector(std::size_t dim, std::size_t variables);

  std::size_t dim() const { return dim_; }
  std::size_t variables() const { return variables_; }

  /// J^{ijk} with the sign of the sorting permutation; zero on repeats.
  Polynomial operator()(std::size_t i, std::size_t j, std::size_t k) const;
  /// Requires i < j < k.
  void set(std::size_t i, std::size_t j, std::size_t k, Polynomial p);
  const Polynomial& upper(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_zero() const;

  Trivector& operator+=(const Trivector& other);
  Trivector& operator-=(const Trivector& other);
  Trivector& operator*=(const Rational& s);
  friend Trivector operator+(Trivector lhs, const Trivector& rhs) { return lhs += rhs; }
  friend Trivector operator-(Trivector lhs, const Trivector& rhs) { return lhs -= rhs; }
  friend Trivector operator*(const Rational& s, Trivector rhs) { return rhs *= s; }
  friend bool operator==(const Trivector&, const Trivector&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;
  void check_compatible(const Trivector& other) const;

  std::size_t dim_ = 0;
  std::size_t variables_ = 0;
  std::vector<Polynomial> upper_;
};

}  // namespace decabracket
