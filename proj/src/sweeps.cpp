#include "decabracket/sweeps.hpp"

#include <array>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "decabracket/ainf.hpp"
#include "decabracket/cech.hpp"
#include "decabracket/poissonlab.hpp"

namespace decabracket {

SweepResult run_serial(std::uint64_t count, const CaseCheck& check) {
  SweepResult result;
  result.cases = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto failure = check(i);
    if (!failure) continue;
    if (result.failures++ == 0) {
      result.first_failure_index = i;
      result.first_failure = std::move(*failure);
    }
  }
  return result;
}

SweepResult run_openmp(std::uint64_t count, const CaseCheck& check, int jobs) {
#ifdef _OPENMP
  SweepResult result;
  result.cases = count;
  std::uint64_t failures = 0;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(count);

#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) reduction(+ : failures)
  for (std::int64_t i = 0; i < n; ++i) {
    auto failure = check(static_cast<std::uint64_t>(i));
    if (!failure) continue;
    ++failures;
#pragma omp critical(decabracket_first_failure)
    {
      if (!result.first_failure_index || static_cast<std::uint64_t>(i) < *result.first_failure_index) {
        result.first_failure_index = static_cast<std::uint64_t>(i);
        result.first_failure = std::move(*failure);
      }
    }
  }
  result.failures = failures;
  return result;
#else
  (void)jobs;
  return run_serial(count, check);
#endif
}

SweepResult run_sweep(std::uint64_t count, const CaseCheck& check, const SweepOptions& options) {
  return options.backend == Backend::serial ? run_serial(count, check) : run_openmp(count, check, options.jobs);
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

SweepResult homotopy_identity_sweep(int n, int bound, const SweepOptions& options) {
  const std::vector<CechBasis> basis = regular_basis(n, bound);
  const IndexSet last({n});
  const IndexSet full = IndexSet::full(n);

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    const CechBasis& b = basis[i];
    const CechElement x = CechElement::basis(n, b);
    const std::string name = b.to_string();
    if (!differential(differential(x)).is_zero()) return "d^2 != 0 on " + name;
    const CechElement qx = homotopy(x);
    if (!homotopy(qx).is_zero()) return "Q^2 != 0 on " + name;
    if (!project(qx).is_zero()) return "pi Q != 0 on " + name;
    const CechElement lhs = x - include(project(x));
    const CechElement rhs = differential(qx) + homotopy(differential(x));
    if (!(lhs == rhs)) return "id - iota pi != dQ + Qd on " + name;

    std::optional<HElement> h;
    if (b.indices == last && b.exponent.all_nonnegative()) h = HElement::monomial(b.exponent);
    if (b.indices == full && b.exponent.all_negative()) h = HElement::top_monomial(b.exponent);
    if (h) {
      if (!(project(include(*h)) == *h)) return "pi iota != id on " + h->to_string();
      if (!homotopy(include(*h)).is_zero()) return "Q iota != 0 on " + h->to_string();
    }
    return std::nullopt;
  };
  return run_sweep(basis.size(), check, options);
}

SweepResult cech_product_sweep(int n, int bound, std::uint64_t samples, std::uint64_t seed,
                               const SweepOptions& options) {
  const std::vector<CechBasis> basis = regular_basis(n, bound);

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    std::mt19937_64 rng(seed + i);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    // Short random combinations exercise linearity as well as the basis rule.
    auto draw = [&] {
      CechElement x(n);
      for (int t = 0; t < 2; ++t) x.add_term(basis[pick(rng)], coeff(rng));
      if (x.is_zero()) x.add_term(basis[pick(rng)], 1);
      return x;
    };
    const CechBasis bx = basis[pick(rng)];
    const CechElement x = CechElement::basis(n, bx);
    const CechElement y = draw();
    const CechElement z = draw();

    const CechElement xy = multiply(x, y);
    const int sign = bx.degree() % 2 == 0 ? 1 : -1;
    if (!(differential(xy) == multiply(differential(x), y) + Rational(sign) * multiply(x, differential(y))))
      return "Leibniz rule fails for " + x.to_string() + " and " + y.to_string();
    if (!(multiply(xy, z) == multiply(x, multiply(y, z))))
      return "associativity fails for " + x.to_string() + ", " + y.to_string() + ", " + z.to_string();
    const CechBasis& by = y.terms().begin()->first;
    const CechElement product = multiply(x, CechElement::basis(n, by));
    for (const auto& [b, c] : product.terms())
      if (b.twist() != bx.twist() + by.twist()) return "twist not additive for " + x.to_string();
    return std::nullopt;
  };
  return run_sweep(samples, check, options);
}

SweepResult m4_equivalence_sweep(const SweepOptions& options) {
  const auto alphas = delta_set(-5);
  const auto& d2 = quadric_exponents();
  const auto& d3 = cubic_exponents();
  const std::uint64_t count = kAllOrderings.size() * alphas.size() * d2.size() * d2.size() * d3.size();

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    std::uint64_t rest = i;
    const MultiIndex& c = d3[rest % d3.size()];
    rest /= d3.size();
    const MultiIndex& b = d2[rest % d2.size()];
    rest /= d2.size();
    const MultiIndex& a = d2[rest % d2.size()];
    rest /= d2.size();
    const MultiIndex& alpha = alphas[rest % alphas.size()];
    rest /= alphas.size();
    const M4Ordering ordering = kAllOrderings[rest];

    const HElement closed = m4_closed(ordering, alpha, a, b, c).as_element();
    const auto args = m4_arguments(ordering, alpha, a, b, c);
    const HElement tree = m4_tree(std::span<const HElement>(args));
    const std::string where = std::string(to_string(ordering)) + " alpha=" + alpha.to_string() +
                              " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
    if (!(closed == tree)) return "tree " + tree.to_string() + " != closed " + closed.to_string() + " at " + where;
    if (!tree.top().empty()) return "m4 left H^0 at " + where;
    if (ordering == M4Ordering::efgh) {
      const auto& trees = four_leaf_trees();
      for (std::size_t t = 0; t < 4; ++t)
        if (!eval_tree(trees[t], args).is_zero()) return "T" + std::to_string(t + 1) + " nonzero at " + where;
    }
    return std::nullopt;
  };
  return run_sweep(count, check, options);
}

SweepResult rho_consistency_sweep(const SweepOptions& options) {
  const auto alphas = delta_set(-5);
  const auto& d2 = quadric_exponents();
  const auto& d3 = cubic_exponents();
  const auto s3 = all_permutations(3);
  const std::uint64_t count = d2.size() * d2.size() * d3.size() * alphas.size() * alphas.size() * s3.size();

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    std::uint64_t rest = i;
    const Permutation& sigma = s3[rest % s3.size()];
    rest /= s3.size();
    const MultiIndex& beta = alphas[rest % alphas.size()];
    rest /= alphas.size();
    const MultiIndex& alpha = alphas[rest % alphas.size()];
    rest /= alphas.size();
    const MultiIndex& c = d3[rest % d3.size()];
    rest /= d3.size();
    const MultiIndex& b = d2[rest % d2.size()];
    rest /= d2.size();
    const MultiIndex& a = d2[rest];

    const std::array<const MultiIndex*, 3> letters = {&a, &b, &c};
    const MultiIndex& s0 = *letters[sigma(0)];
    const MultiIndex& s1 = *letters[sigma(1)];
    const MultiIndex& s2 = *letters[sigma(2)];
    const int lhs = rho_tilde(s0, s1, s2, star(alpha), star(beta));
    const int rhs = rho(alpha, s0, s1, s2) * delta_match(alpha, beta, a, b, c);
    if (lhs != rhs)
      return "rho_tilde=" + std::to_string(lhs) + " rho*delta=" + std::to_string(rhs) + " at a=" + a.to_string() +
             " b=" + b.to_string() + " c=" + c.to_string() + " alpha=" + alpha.to_string() +
             " beta=" + beta.to_string() + " sigma=" + sigma.cycle_string("abc");
    return std::nullopt;
  };
  return run_sweep(count, check, options);
}

SweepResult bracket_oracle_sweep(M4Engine engine, const SweepOptions& options) {
  const auto& d2 = quadric_exponents();
  const auto& d3 = cubic_exponents();
  const std::uint64_t count = d3.size() * d2.size() * d2.size();

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    const MultiIndex& b = d2[i % d2.size()];
    const MultiIndex& a = d2[(i / d2.size()) % d2.size()];
    const MultiIndex& c = d3[i / (d2.size() * d2.size())];
    const Polynomial direct = bracket_entry(c, a, b);
    const Polynomial via = bracket_via_m4(c, a, b, engine);
    if (!(direct == via))
      return "c=" + c.to_string() + " a=" + a.to_string() + " b=" + b.to_string() +
             ": formula " + direct.to_string(coordinate_names()) + " vs m4 " + via.to_string(coordinate_names());
    return std::nullopt;
  };
  return run_sweep(count, check, options);
}

SweepResult chart_jacobi_sweep(std::span<const Bivector> bivectors, const SweepOptions& options) {
  if (bivectors.empty()) return SweepResult{};
  const std::size_t charts = bivectors.front().dim();
  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    const std::size_t which = i / charts;
    const std::size_t chart = i % charts;
    const Trivector j = jacobiator(chart_restrict(bivectors[which], chart).components);
    for (std::size_t a = 0; a < j.dim(); ++a)
      for (std::size_t b = a + 1; b < j.dim(); ++b)
        for (std::size_t c = b + 1; c < j.dim(); ++c)
          if (!j.upper(a, b, c).is_zero())
            return "bivector " + std::to_string(which) + ": " +
                   JacobiWitness{chart, {a, b, c}, j.upper(a, b, c)}.describe();
    return std::nullopt;
  };
  return run_sweep(bivectors.size() * charts, check, options);
}

SweepResult chart_compatibility_sweep(std::span<const Bivector> bivectors, const SweepOptions& options) {
  if (bivectors.empty()) return SweepResult{};
  const std::size_t charts = bivectors.front().dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < bivectors.size(); ++p)
    for (std::size_t q = p + 1; q < bivectors.size(); ++q) pairs.emplace_back(p, q);

  auto check = [&](std::uint64_t i) -> std::optional<std::string> {
    const auto [p, q] = pairs[i / charts];
    const std::size_t chart = i % charts;
    const Trivector j = mixed_jacobiator(chart_restrict(bivectors[p], chart).components,
                                         chart_restrict(bivectors[q], chart).components);
    for (std::size_t a = 0; a < j.dim(); ++a)
      for (std::size_t b = a + 1; b < j.dim(); ++b)
        for (std::size_t c = b + 1; c < j.dim(); ++c)
          if (!j.upper(a, b, c).is_zero())
            return "pair (" + std::to_string(p) + "," + std::to_string(q) + "): " +
                   JacobiWitness{chart, {a, b, c}, j.upper(a, b, c)}.describe();
    return std::nullopt;
  };
  return run_sweep(pairs.size() * charts, check, options);
}

}  // namespace decabracket
