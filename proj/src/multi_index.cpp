#include "decabracket/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace decabracket {

MultiIndex::MultiIndex(std::size_t length) {
  if (length > kMaxLength) throw std::length_error("MultiIndex: length exceeds capacity");
  size_ = static_cast<std::uint8_t>(length);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::span<const int>(entries.begin(), entries.size())) {}

MultiIndex::MultiIndex(std::span<const int> entries) : MultiIndex(entries.size()) {
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

int MultiIndex::sum() const { return std::accumulate(begin(), end(), 0); }

bool MultiIndex::all_nonnegative() const {
  return std::all_of(begin(), end(), [](int e) { return e >= 0; });
}

bool MultiIndex::all_negative() const {
  return std::all_of(begin(), end(), [](int e) { return e < 0; });
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.size_ != size_) throw std::invalid_argument("MultiIndex: length mismatch");
  for (std::size_t i = 0; i < size_; ++i) entries_[i] += other.entries_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  if (other.size_ != size_) throw std::invalid_argument("MultiIndex: length mismatch");
  for (std::size_t i = 0; i < size_; ++i) entries_[i] -= other.entries_[i];
  return *this;
}

MultiIndex MultiIndex::operator-() const {
  MultiIndex out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.entries_[i] = -entries_[i];
  return out;
}

bool operator==(const MultiIndex& lhs, const MultiIndex& rhs) {
  return lhs.size_ == rhs.size_ && std::equal(lhs.begin(), lhs.end(), rhs.begin());
}

std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs) {
  if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

std::string MultiIndex::compact() const {
  std::string out;
  for (int e : *this) out += std::to_string(e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.to_string(); }

std::vector<MultiIndex> delta_set(int n) {
  std::vector<MultiIndex> out;
  if (n >= 0) {
    for (int a0 = n; a0 >= 0; --a0)
      for (int a1 = n - a0; a1 >= 0; --a1) out.push_back({a0, a1, n - a0 - a1});
  } else {
    // a0, a1 <= -1 and a2 = n - a0 - a1 <= -1.
    for (int a0 = -1; a0 >= n + 2; --a0)
      for (int a1 = -1; n - a0 - a1 <= -1; --a1) out.push_back({a0, a1, n - a0 - a1});
  }
  return out;
}

MultiIndex star(const MultiIndex& alpha) {
  MultiIndex out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = -1 - alpha[i];
  return out;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

int Permutation::sign() const {
  int s = 1;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<std::size_t> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[i] = image_[other.image_[i]];
  return Permutation(std::move(image));
}

MultiIndex Permutation::act(const MultiIndex& v) const {
  if (v.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
  MultiIndex out(v.size());
  for (std::size_t i = 0; i < size(); ++i) out[image_[i]] = v[i];
  return out;
}

std::string Permutation::cycle_string(std::string_view letters) const {
  std::vector<bool> done(size(), false);
  std::string out;
  for (std::size_t start = 0; start < size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !done[i]; i = image_[i]) {
      done[i] = true;
      if (out.back() != '(') out += ' ';
      out += i < letters.size() ? letters[i] : '?';
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace decabracket
