#include "decabracket/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace decabracket {

Polynomial::Polynomial(std::size_t variables) : variables_(variables) {
  if (variables > MultiIndex::kMaxLength) throw std::length_error("Polynomial: too many variables");
}

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(MultiIndex(variables), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("Polynomial::variable: index out of range");
  MultiIndex e(variables);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const MultiIndex& exponent, const Rational& c) {
  Polynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

Rational Polynomial::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& exponent, const Rational& c) {
  if (exponent.size() != variables_) throw std::invalid_argument("Polynomial: exponent length mismatch");
  if (!exponent.all_nonnegative()) throw std::invalid_argument("Polynomial: negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  // Graded order puts the highest degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.sum();
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (e.sum() != degree) return false;
  return true;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= variables_) throw std::out_of_range("Polynomial::derivative: index out of range");
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    MultiIndex d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

Polynomial Polynomial::eliminate_variable(std::size_t index, const Rational& value) const {
  if (index >= variables_) throw std::out_of_range("Polynomial::eliminate_variable: index out of range");
  Polynomial out(variables_ - 1);
  for (const auto& [e, c] : terms_) {
    MultiIndex reduced(variables_ - 1);
    for (std::size_t i = 0, k = 0; i < variables_; ++i)
      if (i != index) reduced[k++] = e[i];
    Rational factor = c;
    for (int p = 0; p < e[index]; ++p) factor *= value;
    out.add_term(reduced, factor);
  }
  return out;
}

Polynomial Polynomial::rename(const std::vector<std::size_t>& map, std::size_t variables) const {
  if (map.size() != variables_) throw std::invalid_argument("Polynomial::rename: map size mismatch");
  Polynomial out(variables);
  for (const auto& [e, c] : terms_) {
    MultiIndex r(variables);
    for (std::size_t i = 0; i < variables_; ++i) {
      if (map[i] >= variables) throw std::out_of_range("Polynomial::rename: target out of range");
      r[map[i]] += e[i];
    }
    out.add_term(r, c);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.variables_ != variables_) throw std::invalid_argument("Polynomial: variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial out(lhs.variables_);
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.variables_ == rhs.variables_ && lhs.terms_ == rhs.terms_;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() < variables_) throw std::invalid_argument("Polynomial::to_string: too few names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < variables_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << mono;
    } else {
      os << magnitude.get_str() << '*' << mono;
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const { return to_string(indexed_names("x", variables_)); }

}  // namespace decabracket
