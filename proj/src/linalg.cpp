#include "decabracket/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace decabracket {

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [col, value] : entries) {
    if (!entries_.empty() && entries_.back().first == col) {
      entries_.back().second += value;
    } else {
      if (!entries_.empty() && sgn(entries_.back().second) == 0) entries_.pop_back();
      entries_.emplace_back(col, std::move(value));
    }
  }
  if (!entries_.empty() && sgn(entries_.back().second) == 0) entries_.pop_back();
}

void SparseVector::axpy(const Rational& s, const SparseVector& other) {
  if (sgn(s) == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, s * b->second);
      ++b;
    } else {
      Rational v = a->second + s * b->second;
      if (sgn(v) != 0) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& s) {
  if (sgn(s) == 0) {
    entries_.clear();
    return;
  }
  for (auto& [col, value] : entries_) value *= s;
}

bool RowEchelon::insert(SparseVector row, Rational rhs) {
  while (!row.empty()) {
    auto it = pivots_.find(row.leading());
    if (it == pivots_.end()) break;
    const Rational factor = -row.leading_value();
    row.axpy(factor, it->second.row);
    rhs += factor * it->second.rhs;
  }
  if (row.empty()) {
    if (sgn(rhs) != 0) consistent_ = false;
    return consistent_;
  }
  const Rational inv = 1 / row.leading_value();
  row.scale(inv);
  rhs *= inv;
  const std::size_t lead = row.leading();
  pivots_.emplace(lead, Pivot{std::move(row), std::move(rhs)});
  return consistent_;
}

std::optional<std::vector<Rational>> RowEchelon::solve(std::size_t unknowns) const {
  if (!consistent_) return std::nullopt;
  std::vector<Rational> x(unknowns, Rational(0));
  // Pivot rows only reference columns to the right of their leading column.
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const auto& [lead, pivot] = *it;
    if (lead >= unknowns) throw std::out_of_range("RowEchelon::solve: column beyond unknown count");
    Rational value = pivot.rhs;
    for (const auto& [col, coeff] : pivot.row.entries())
      if (col != lead) value -= coeff * x[col];
    x[lead] = value;
  }
  return x;
}

std::size_t rank(const std::vector<SparseVector>& rows) {
  RowEchelon echelon;
  for (const auto& r : rows) echelon.insert(r);
  return echelon.rank();
}

bool in_span(const std::vector<SparseVector>& rows, const SparseVector& target) {
  RowEchelon echelon;
  for (const auto& r : rows) echelon.insert(r);
  const std::size_t before = echelon.rank();
  echelon.insert(target);
  return echelon.rank() == before;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVector>& generators,
                                                       const SparseVector& target) {
  // Transpose: one equation per coordinate, one unknown per generator.
  std::map<std::size_t, std::vector<SparseVector::Entry>> equations;
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (const auto& [col, value] : generators[g].entries()) equations[col].emplace_back(g, value);
  std::map<std::size_t, Rational> rhs;
  for (const auto& [col, value] : target.entries()) {
    rhs[col] = value;
    equations.try_emplace(col);
  }

  RowEchelon echelon;
  for (auto& [col, entries] : equations) {
    auto r = rhs.find(col);
    if (!echelon.insert(SparseVector(std::move(entries)), r == rhs.end() ? Rational(0) : r->second))
      return std::nullopt;
  }
  return echelon.solve(generators.size());
}

}  // namespace decabracket
