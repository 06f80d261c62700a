#include "decabracket/cech.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace decabracket {

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) {
    if (i < 0 || i >= 8) throw std::out_of_range("IndexSet: member out of range");
    mask_ = static_cast<std::uint8_t>(mask_ | (1U << i));
  }
}

IndexSet IndexSet::full(int n) {
  if (n < 0 || n >= 8) throw std::out_of_range("IndexSet::full: n out of range");
  return IndexSet(static_cast<std::uint8_t>((1U << (n + 1)) - 1));
}

int IndexSet::size() const { return std::popcount(mask_); }

int IndexSet::min() const {
  if (empty()) throw std::logic_error("IndexSet::min of empty set");
  return std::countr_zero(mask_);
}

int IndexSet::max() const {
  if (empty()) throw std::logic_error("IndexSet::max of empty set");
  return 7 - std::countl_zero(mask_);
}

int IndexSet::position(int i) const {
  return std::popcount(static_cast<std::uint8_t>(mask_ & ((1U << i) - 1)));
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 8; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool CechBasis::is_regular() const {
  if (indices.empty()) return false;
  for (std::size_t i = 0; i < exponent.size(); ++i)
    if (exponent[i] < 0 && !indices.contains(static_cast<int>(i))) return false;
  return true;
}

std::string CechBasis::to_string() const { return "x^" + exponent.to_string() + "_" + indices.to_string(); }

std::strong_ordering operator<=>(const CechBasis& lhs, const CechBasis& rhs) {
  if (auto c = lhs.exponent <=> rhs.exponent; c != 0) return c;
  return lhs.indices <=> rhs.indices;
}

CechElement::CechElement(int n) : n_(n) {
  if (n < 1 || n + 1 > static_cast<int>(MultiIndex::kMaxLength))
    throw std::out_of_range("CechElement: unsupported ambient dimension");
}

CechElement CechElement::basis(int n, const CechBasis& b, const Rational& c) {
  CechElement x(n);
  x.add_term(b, c);
  return x;
}

Rational CechElement::coefficient(const CechBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CechElement::add_term(const CechBasis& b, const Rational& c) {
  if (b.exponent.size() != static_cast<std::size_t>(n_ + 1))
    throw std::invalid_argument("CechElement: exponent length mismatch");
  if (b.indices.mask() >> (n_ + 1)) throw std::invalid_argument("CechElement: index beyond n");
  if (!b.is_regular()) throw std::invalid_argument("CechElement: irregular basis element " + b.to_string());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CechElement CechElement::degree_part(int p) const {
  CechElement out(n_);
  for (const auto& [b, c] : terms_)
    if (b.degree() == p) out.terms_.emplace(b, c);
  return out;
}

CechElement CechElement::twist_part(int q) const {
  CechElement out(n_);
  for (const auto& [b, c] : terms_)
    if (b.twist() == q) out.terms_.emplace(b, c);
  return out;
}

CechElement CechElement::isotypic_part(const MultiIndex& e) const {
  CechElement out(n_);
  for (const auto& [b, c] : terms_)
    if (b.exponent == e) out.terms_.emplace(b, c);
  return out;
}

void CechElement::check_compatible(const CechElement& other) const {
  if (other.n_ != n_) throw std::invalid_argument("CechElement: ambient dimension mismatch");
}

CechElement& CechElement::operator+=(const CechElement& other) {
  check_compatible(other);
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

CechElement& CechElement::operator-=(const CechElement& other) {
  check_compatible(other);
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

CechElement& CechElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::string CechElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str() << "*" << b.to_string();
    first = false;
  }
  return os.str();
}

HElement::HElement(int n) : n_(n), degree_zero_(static_cast<std::size_t>(n + 1)) {
  if (n < 1 || n + 1 > static_cast<int>(MultiIndex::kMaxLength))
    throw std::out_of_range("HElement: unsupported ambient dimension");
}

HElement HElement::from_polynomial(int n, const Polynomial& p) {
  HElement h(n);
  h.degree_zero_ += p;
  return h;
}

HElement HElement::monomial(const MultiIndex& exponent, const Rational& c) {
  return from_polynomial(static_cast<int>(exponent.size()) - 1, Polynomial::monomial(exponent, c));
}

HElement HElement::top_monomial(const MultiIndex& alpha, const Rational& c) {
  HElement h(static_cast<int>(alpha.size()) - 1);
  h.add_top_term(alpha, c);
  return h;
}

std::optional<int> HElement::degree() const {
  const bool has0 = !degree_zero_.is_zero();
  const bool hasn = !top_.empty();
  if (has0 == hasn) return std::nullopt;
  return has0 ? 0 : n_;
}

void HElement::add_top_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != static_cast<std::size_t>(n_ + 1))
    throw std::invalid_argument("HElement: exponent length mismatch");
  if (!alpha.all_negative()) throw std::invalid_argument("HElement: top class needs all-negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = top_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) top_.erase(it);
  }
}

void HElement::check_compatible(const HElement& other) const {
  if (other.n_ != n_) throw std::invalid_argument("HElement: ambient dimension mismatch");
}

HElement& HElement::operator+=(const HElement& other) {
  check_compatible(other);
  degree_zero_ += other.degree_zero_;
  for (const auto& [a, c] : other.top_) add_top_term(a, c);
  return *this;
}

HElement& HElement::operator-=(const HElement& other) {
  check_compatible(other);
  degree_zero_ -= other.degree_zero_;
  for (const auto& [a, c] : other.top_) add_top_term(a, -c);
  return *this;
}

HElement& HElement::operator*=(const Rational& s) {
  degree_zero_ *= s;
  if (sgn(s) == 0) {
    top_.clear();
    return *this;
  }
  for (auto& [a, c] : top_) c *= s;
  return *this;
}

std::string HElement::to_string() const {
  std::string out;
  if (!degree_zero_.is_zero()) out = degree_zero_.to_string();
  for (const auto& [a, c] : top_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*x^" + a.to_string() + "_top";
  }
  return out.empty() ? "0" : out;
}

std::optional<int> k_of(const MultiIndex& e) {
  for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
    if (e[i] >= 0) return i;
  return std::nullopt;
}

CechElement differential(const CechElement& x) {
  const int n = x.ambient();
  CechElement out(n);
  for (const auto& [b, c] : x.terms()) {
    for (int j = 0; j <= n; ++j) {
      if (b.indices.contains(j)) continue;
      const IndexSet target = b.indices.with(j);
      const int sign = target.position(j) % 2 == 0 ? 1 : -1;
      out.add_term(CechBasis{target, b.exponent}, sign * c);
    }
  }
  return out;
}

CechElement multiply(const CechElement& x, const CechElement& y) {
  if (x.ambient() != y.ambient()) throw std::invalid_argument("multiply: ambient dimension mismatch");
  CechElement out(x.ambient());
  for (const auto& [bx, cx] : x.terms()) {
    const int last = bx.indices.max();
    for (const auto& [by, cy] : y.terms()) {
      // The tuples must chain: I ends where I' starts and they share nothing else.
      if (by.indices.min() != last) continue;
      if ((bx.indices.mask() & by.indices.mask()) != (1U << last)) continue;
      const IndexSet joined(static_cast<std::uint8_t>(bx.indices.mask() | by.indices.mask()));
      out.add_term(CechBasis{joined, bx.exponent + by.exponent}, cx * cy);
    }
  }
  return out;
}

CechElement homotopy(const CechElement& x) {
  CechElement out(x.ambient());
  for (const auto& [b, c] : x.terms()) {
    const auto k = k_of(b.exponent);
    if (!k || !b.indices.contains(*k) || b.indices.size() == 1) continue;
    const int sign = b.indices.position(*k) % 2 == 0 ? 1 : -1;
    out.add_term(CechBasis{b.indices.without(*k), b.exponent}, sign * c);
  }
  return out;
}

CechElement include(const HElement& h) {
  const int n = h.ambient();
  if (!h.degree_zero().is_zero() && !h.top().empty())
    throw std::invalid_argument("include: element mixes degree 0 and degree n");
  CechElement out(n);
  for (const auto& [e, c] : h.degree_zero().terms())
    for (int k = 0; k <= n; ++k) out.add_term(CechBasis{IndexSet({k}), e}, c);
  for (const auto& [a, c] : h.top()) out.add_term(CechBasis{IndexSet::full(n), a}, c);
  return out;
}

HElement project(const CechElement& x) {
  const int n = x.ambient();
  HElement out(n);
  Polynomial h0(static_cast<std::size_t>(n + 1));
  for (const auto& [b, c] : x.terms()) {
    if (b.indices == IndexSet({n}) && b.exponent.all_nonnegative()) {
      h0.add_term(b.exponent, c);
    } else if (b.indices == IndexSet::full(n) && b.exponent.all_negative()) {
      out.add_top_term(b.exponent, c);
    }
  }
  out += HElement::from_polynomial(n, h0);
  return out;
}

std::vector<CechBasis> regular_basis(int n, int bound) {
  std::vector<CechBasis> out;
  const int width = 2 * bound + 1;
  int total = 1;
  for (int i = 0; i <= n; ++i) total *= width;
  for (int code = 0; code < total; ++code) {
    MultiIndex e(static_cast<std::size_t>(n + 1));
    for (int i = 0, rest = code; i <= n; ++i, rest /= width) e[i] = rest % width - bound;
    for (unsigned mask = 1; mask < (1U << (n + 1)); ++mask) {
      CechBasis b{IndexSet(static_cast<std::uint8_t>(mask)), e};
      if (b.is_regular()) out.push_back(b);
    }
  }
  return out;
}

}  // namespace decabracket
