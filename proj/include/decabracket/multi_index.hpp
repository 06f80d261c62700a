#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace decabracket {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Integer exponent vector of fixed length (at most kMaxLength entries).
///
/// Houses polynomial exponents, Laurent exponents of Cech cochains, and the
/// labels of Delta(n). Arithmetic is entrywise; the default ordering is
/// ascending lexicographic and is only used for associative containers.
class MultiIndex {
 public:
  static constexpr std::size_t kMaxLength = 8;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t length);
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::span<const int> entries);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }

  const int* begin() const { return entries_.data(); }
  const int* end() const { return entries_.data() + size_; }

  int sum() const;
  bool all_nonnegative() const;
  bool all_negative() const;

  MultiIndex& operator+=(const MultiIndex& other);
  MultiIndex& operator-=(const MultiIndex& other);

  friend MultiIndex operator+(MultiIndex lhs, const MultiIndex& rhs) { return lhs += rhs; }
  friend MultiIndex operator-(MultiIndex lhs, const MultiIndex& rhs) { return lhs -= rhs; }
  MultiIndex operator-() const;

  friend bool operator==(const MultiIndex& lhs, const MultiIndex& rhs);
  friend std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs);

  /// "(a,b,c)" form.
  std::string to_string() const;
  /// Concatenated digits, e.g. "110"; only meaningful for single-digit entries.
  std::string compact() const;

 private:
  std::array<int, kMaxLength> entries_{};
  std::uint8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

/// Descending lexicographic order, the canonical order for Delta(n) listings.
struct LexGreater {
  bool operator()(const MultiIndex& lhs, const MultiIndex& rhs) const { return lhs > rhs; }
};

/// Delta(n) for triples: nonnegative triples summing to n when n >= 0,
/// strictly negative triples summing to n when n < 0. Canonical order.
/// Empty for n = -1 and n = -2.
std::vector<MultiIndex> delta_set(int n);

/// (-1,...,-1) - alpha. An involution; maps Delta(-5) onto Delta(2).
MultiIndex star(const MultiIndex& alpha);

/// Permutation of {0,...,k-1}, stored as the image of each point.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t k);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  int sign() const;
  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  /// Moves entry i of v to position sigma(i).
  MultiIndex act(const MultiIndex& v) const;

  /// Cycle notation on the given letters, e.g. "(a b)" or "id".
  std::string cycle_string(std::string_view letters = "012") const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// All k! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(std::size_t k);

}  // namespace decabracket
