#include "decabracket/bivector.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace decabracket {

Bivector::Bivector(std::size_t dim, std::size_t variables)
    : dim_(dim), variables_(variables), upper_(dim * (dim - (dim ? 1 : 0)) / 2, Polynomial(variables)) {}

std::size_t Bivector::slot(std::size_t i, std::size_t j) const {
  // Row-major over the strict upper triangle.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Polynomial Bivector::operator()(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("Bivector: index out of range");
  if (i == j) return Polynomial(variables_);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

const Polynomial& Bivector::upper(std::size_t i, std::size_t j) const {
  if (!(i < j && j < dim_)) throw std::out_of_range("Bivector::upper: need i < j < dim");
  return upper_[slot(i, j)];
}

void Bivector::set(std::size_t i, std::size_t j, Polynomial p) {
  if (i >= dim_ || j >= dim_ || i == j) throw std::out_of_range("Bivector::set: bad index pair");
  if (p.variables() != variables_) throw std::invalid_argument("Bivector::set: variable count mismatch");
  if (i < j) {
    upper_[slot(i, j)] = std::move(p);
  } else {
    upper_[slot(j, i)] = -p;
  }
}

bool Bivector::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void Bivector::check_compatible(const Bivector& other) const {
  if (other.dim_ != dim_ || other.variables_ != variables_)
    throw std::invalid_argument("Bivector: shape mismatch");
}

Bivector& Bivector::operator+=(const Bivector& other) {
  check_compatible(other);
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] += other.upper_[s];
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& other) {
  check_compatible(other);
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] -= other.upper_[s];
  return *this;
}

Bivector& Bivector::operator*=(const Rational& s) {
  for (auto& p : upper_) p *= s;
  return *this;
}

Trivector::Trivector(std::size_t dim, std::size_t variables)
    : dim_(dim), variables_(variables), upper_(dim * dim * dim, Polynomial(variables)) {}

std::size_t Trivector::slot(std::size_t i, std::size_t j, std::size_t k) const {
  // Dense cube indexing; only sorted triples are ever touched.
  return (i * dim_ + j) * dim_ + k;
}

Polynomial Trivector::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("Trivector: index out of range");
  if (i == j || j == k || i == k) return Polynomial(variables_);
  int sign = 1;
  std::size_t a = i, b = j, c = k;
  if (a > b) std::swap(a, b), sign = -sign;
  if (b > c) std::swap(b, c), sign = -sign;
  if (a > b) std::swap(a, b), sign = -sign;
  const Polynomial& p = upper_[slot(a, b, c)];
  return sign > 0 ? p : -p;
}

const Polynomial& Trivector::upper(std::size_t i, std::size_t j, std::size_t k) const {
  if (!(i < j && j < k && k < dim_)) throw std::out_of_range("Trivector::upper: need i < j < k < dim");
  return upper_[slot(i, j, k)];
}

void Trivector::set(std::size_t i, std::size_t j, std::size_t k, Polynomial p) {
  if (!(i < j && j < k && k < dim_)) throw std::out_of_range("Trivector::set: need i < j < k < dim");
  if (p.variables() != variables_) throw std::invalid_argument("Trivector::set: variable count mismatch");
  upper_[slot(i, j, k)] = std::move(p);
}

bool Trivector::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void Trivector::check_compatible(const Trivector& other) const {
  if (other.dim_ != dim_ || other.variables_ != variables_)
    throw std::invalid_argument("Trivector: shape mismatch");
}

Trivector& Trivector::operator+=(const Trivector& other) {
  check_compatible(other);
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] += other.upper_[s];
  return *this;
}

Trivector& Trivector::operator-=(const Trivector& other) {
  check_compatible(other);
  for (std::size_t s = 0; s < upper_.size(); ++s) upper_[s] -= other.upper_[s];
  return *this;
}

Trivector& Trivector::operator*=(const Rational& s) {
  for (auto& p : upper_) p *= s;
  return *this;
}

}  // namespace decabracket
