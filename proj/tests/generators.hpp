#pragma once

// Small random generators for property tests.

#include <random>

#include "decabracket/bivector.hpp"
#include "decabracket/polynomial.hpp"

namespace decabracket::gen {

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational q{mpz_class(num(rng)), mpz_class(den(rng))};
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    MultiIndex e(vars);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) e[var(rng)] += 1;
    p.add_term(e, random_rational(rng));
  }
  return p;
}

/// Homogeneous polynomial of the given degree.
inline Polynomial random_form(std::mt19937_64& rng, std::size_t vars, int degree, int terms) {
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    MultiIndex e(vars);
    for (int k = 0; k < degree; ++k) e[var(rng)] += 1;
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline Bivector random_quadratic_bivector(std::mt19937_64& rng, std::size_t dim, int terms) {
  Bivector b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) b.set(i, j, random_form(rng, dim, 2, terms));
  return b;
}

}  // namespace decabracket::gen
