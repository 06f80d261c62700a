#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "decabracket/multi_index.hpp"

namespace decabracket {

/// Sparse rational vector: (column, value) pairs sorted by column, no zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  /// Accepts unsorted input with repeats; sums duplicates and drops zeros.
  explicit SparseVector(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t leading() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }

  /// this += s * other
  void axpy(const Rational& s, const SparseVector& other);
  void scale(const Rational& s);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Incremental row echelon form over Q with an optional right-hand side.
///
/// Rows are reduced against the current pivots as they are inserted, so the
/// cost is driven by fill-in rather than by the nominal matrix shape. Each
/// instance is independent; separate instances may be used concurrently.
class RowEchelon {
 public:
  /// Inserts the equation row . x = rhs. Returns false iff the row reduced to
  /// 0 = nonzero (the system became inconsistent). Dependent rows are dropped.
  bool insert(SparseVector row, Rational rhs = 0);

  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  /// A solution with free variables set to zero, or nullopt if inconsistent.
  std::optional<std::vector<Rational>> solve(std::size_t unknowns) const;

 private:
  struct Pivot {
    SparseVector row;  // leading coefficient normalised to 1
    Rational rhs;
  };
  std::map<std::size_t, Pivot> pivots_;
  bool consistent_ = true;
};

/// Rank of the given rows.
std::size_t rank(const std::vector<SparseVector>& rows);

/// Whether target lies in the row span of `rows`.
bool in_span(const std::vector<SparseVector>& rows, const SparseVector& target);

/// Solves sum_g x_g * generators[g] = target; returns x (free variables zero)
/// or nullopt if target is not in the span.
std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& generators,
                                                       const SparseVector& target);

}  // namespace decabracket
