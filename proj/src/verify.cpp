#include "decabracket/verify.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "decabracket/ainf.hpp"
#include "decabracket/fobracket.hpp"
#include "decabracket/poissonlab.hpp"

namespace decabracket {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
CheckOutcome timed(std::string name, F&& body) {
  const auto start = Clock::now();
  CheckOutcome out = body();
  out.name = std::move(name);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

CheckOutcome from_sweep(const SweepResult& r) {
  CheckOutcome out;
  out.passed = r.passed();
  out.cases = r.cases;
  out.failures = r.failures;
  out.witness = r.first_failure;
  return out;
}

// Records a failing case; keeps the first witness.
void fail(CheckOutcome& out, const std::string& witness) {
  if (out.failures++ == 0) out.witness = witness;
  out.passed = false;
}

std::size_t table_position(const MultiIndex& c) {
  const auto& d3 = cubic_exponents();
  for (std::size_t i = 0; i < d3.size(); ++i)
    if (d3[i] == c) return i;
  throw std::out_of_range("not in Delta(3): " + c.to_string());
}

std::vector<Bivector> monomial_bivectors() {
  std::vector<Bivector> out;
  for (const auto& t : monomial_tables()) out.push_back(bivector_of(t));
  return out;
}

std::string sigma_name(const Permutation& sigma) { return sigma.cycle_string("012"); }

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::render_text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (c.passed) ++passed;
    os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << c.name << " cases=" << c.cases;
    if (c.failures) os << " failures=" << c.failures;
    os << " time=" << std::fixed << std::setprecision(2) << c.seconds << "s\n";
    if (!c.witness.empty()) os << "      witness: " << c.witness << '\n';
    if (!c.note.empty()) os << "      note: " << c.note << '\n';
  }
  os << passed << '/' << checks.size() << " checks passed\n";
  return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema-version"] = "decabracket/1";
  doc["passed"] = all_passed();
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["witness"] = c.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(c.witness);
    if (!c.note.empty()) j["note"] = c.note;
    j["seconds"] = c.seconds;
    list.push_back(std::move(j));
  }
  doc["checks"] = std::move(list);
  return doc;
}

Suite parse_suite(std::string_view text) {
  if (text == "all") return Suite::all;
  if (text == "cech") return Suite::cech;
  if (text == "ainf") return Suite::ainf;
  if (text == "tables") return Suite::tables;
  if (text == "poisson") return Suite::poisson;
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

namespace checks {

CheckOutcome homotopy_identities(int n, int bound, const SweepOptions& options) {
  return timed("cech.homotopy-identities n=" + std::to_string(n) + " bound=" + std::to_string(bound),
               [&] { return from_sweep(homotopy_identity_sweep(n, bound, options)); });
}

CheckOutcome cech_products(int n, int bound, std::uint64_t samples, const SweepOptions& options) {
  return timed("cech.product-laws n=" + std::to_string(n),
               [&] { return from_sweep(cech_product_sweep(n, bound, samples, 20240611, options)); });
}

CheckOutcome tree_enumeration() {
  return timed("ainf.four-leaf-trees", [] {
    CheckOutcome out;
    out.passed = true;
    const auto trees = binary_trees(4);
    const auto& named = four_leaf_trees();
    out.cases = trees.size();
    if (trees.size() != 5) fail(out, "expected 5 trees, found " + std::to_string(trees.size()));
    for (const auto& t : named) {
      bool found = false;
      for (const auto& u : trees) found = found || u == t;
      if (!found) fail(out, "tree " + t.to_string() + " not enumerated");
    }
    const std::array<int, 5> expected = {-1, 1, -1, 1, 1};
    for (std::size_t i = 0; i < named.size(); ++i)
      if (named[i].sign() != expected[i]) fail(out, "unexpected sign for " + named[i].to_string());
    return out;
  });
}

CheckOutcome m4_equivalence(const SweepOptions& options) {
  return timed("ainf.m4-tree-vs-closed", [&] { return from_sweep(m4_equivalence_sweep(options)); });
}

CheckOutcome rho_consistency(const SweepOptions& options) {
  return timed("tables.rho-tilde-consistency", [&] { return from_sweep(rho_consistency_sweep(options)); });
}

CheckOutcome bracket_oracle(M4Engine engine, const SweepOptions& options) {
  const std::string name =
      engine == M4Engine::closed_form ? "tables.m4-oracle (closed form)" : "tables.m4-oracle (trees)";
  return timed(name, [&] { return from_sweep(bracket_oracle_sweep(engine, options)); });
}

CheckOutcome skew_and_grading() {
  return timed("tables.skew-and-grading", [] {
    CheckOutcome out;
    out.passed = true;
    const auto& d2 = quadric_exponents();
    const auto& d3 = cubic_exponents();
    const auto& tables = monomial_tables();
    const MultiIndex ones{1, 1, 1};
    for (std::size_t t = 0; t < d3.size(); ++t) {
      const MultiIndex& c = d3[t];
      for (std::size_t i = 0; i < d2.size(); ++i) {
        for (std::size_t j = 0; j < d2.size(); ++j) {
          ++out.cases;
          const Polynomial e = bracket_entry(c, d2[i], d2[j]);
          const std::string where = "c=" + c.to_string() + " a=" + d2[i].to_string() + " b=" + d2[j].to_string();
          if (!(e == -bracket_entry(c, d2[j], d2[i]))) fail(out, "not skew at " + where);
          if (i == j && !e.is_zero()) fail(out, "nonzero diagonal at " + where);
          if (!(tables[t].entries()(i, j) == e)) fail(out, "table disagrees with bracket_entry at " + where);
          const MultiIndex target = d2[i] + d2[j] + c - ones;
          for (const auto& [m, coeff] : e.terms()) {
            MultiIndex sum(3);
            for (std::size_t k = 0; k < m.size(); ++k)
              for (int r = 0; r < m[k]; ++r) sum += d2[k];
            if (sum != target) fail(out, "term off grade at " + where + ": " + sum.to_string());
          }
        }
      }
    }
    return out;
  });
}

CheckOutcome integer_coefficients() {
  return timed("tables.integer-coefficients", [] {
    CheckOutcome out;
    out.passed = true;
    for (const auto& t : monomial_tables())
      for (std::size_t i = 0; i < kCoordinates; ++i)
        for (std::size_t j = i + 1; j < kCoordinates; ++j) {
          ++out.cases;
          if (!t.entries().upper(i, j).has_integer_coefficients())
            fail(out, "non-integer entry in table " + t.label().to_string());
        }
    return out;
  });
}

CheckOutcome permutation_support() {
  return timed("tables.permutation-support", [] {
    CheckOutcome out;
    out.passed = true;
    const auto& d2 = quadric_exponents();
    const Permutation id = Permutation::identity(3);
    const Permutation swap_ab({1, 0, 2});
    const MultiIndex c003{0, 0, 3};
    const MultiIndex c120{1, 2, 0};
    bool allowed_nonzero_003 = false;
    bool allowed_nonzero_120 = false;
    for (const auto& sigma : all_permutations(3)) {
      const bool pair = sigma == id || sigma == swap_ab;
      for (const auto& a : d2)
        for (const auto& b : d2)
          for (const auto& ap : d2)
            for (const auto& bp : d2) {
              out.cases += 2;
              const int v003 = bracket_coefficient_for(sigma, c003, a, b, ap, bp);
              const int v120 = bracket_coefficient_for(sigma, c120, a, b, ap, bp);
              const std::string where = " sigma=" + sigma_name(sigma) + " a=" + a.to_string() + " b=" +
                                        b.to_string() + " a'=" + ap.to_string() + " b'=" + bp.to_string();
              if (pair) {
                allowed_nonzero_003 = allowed_nonzero_003 || v003 != 0;
                if (v120 != 0) fail(out, "c=(1,2,0) term survives at" + where);
              } else {
                allowed_nonzero_120 = allowed_nonzero_120 || v120 != 0;
                if (v003 != 0) fail(out, "c=(0,0,3) term survives at" + where);
              }
            }
    }
    if (!allowed_nonzero_003) fail(out, "c=(0,0,3): id and (a b) contribute nothing");
    if (!allowed_nonzero_120) fail(out, "c=(1,2,0): remaining permutations contribute nothing");
    return out;
  });
}

CheckOutcome jacobi_on_charts(const SweepOptions& options) {
  return timed("poisson.jacobi-on-charts", [&] {
    const auto bivectors = monomial_bivectors();
    return from_sweep(chart_jacobi_sweep(bivectors, options));
  });
}

CheckOutcome compatibility_on_charts(const SweepOptions& options) {
  return timed("poisson.compatibility-on-charts", [&] {
    const auto bivectors = monomial_bivectors();
    return from_sweep(chart_compatibility_sweep(bivectors, options));
  });
}

CheckOutcome random_pencils(std::uint64_t count, std::uint64_t seed) {
  return timed("poisson.random-pencils", [&] {
    CheckOutcome out;
    out.passed = true;
    const auto bivectors = monomial_bivectors();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, bivectors.size() - 1);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    auto lambda = [&] {
      long p = 0;
      while (p == 0) p = num(rng);
      Rational q{mpz_class(p), mpz_class(den(rng))};
      q.canonicalize();
      return q;
    };
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      while (j == i) j = pick(rng);
      const Rational l1 = lambda();
      const Rational l2 = lambda();
      ++out.cases;
      const auto check = is_poisson_on_P5(l1 * bivectors[i] + l2 * bivectors[j]);
      if (!check)
        fail(out, to_string(l1) + "*T" + std::to_string(i) + " + " + to_string(l2) + "*T" + std::to_string(j) +
                      ": " + check.witness->describe());
    }
    return out;
  });
}

CheckOutcome fermat_cubic() {
  return timed("poisson.fermat-cubic", [] {
    CheckOutcome out;
    out.passed = true;
    out.cases = 1;
    Polynomial f(3);
    f.add_term(MultiIndex{3, 0, 0}, 1);
    f.add_term(MultiIndex{0, 3, 0}, 1);
    f.add_term(MultiIndex{0, 0, 3}, 1);
    const BracketTable table = bracket_table(f);
    const auto& tables = monomial_tables();
    const Bivector sum = tables[table_position({3, 0, 0})].entries() + tables[table_position({0, 3, 0})].entries() +
                         tables[table_position({0, 0, 3})].entries();
    if (!(table.entries() == sum)) fail(out, "table of x0^3+x1^3+x2^3 is not the sum of three monomial tables");
    const auto check = is_poisson_on_P5(table.entries());
    if (!check) fail(out, check.witness->describe());
    return out;
  });
}

CheckOutcome linear_independence() {
  return timed("poisson.rank", [] {
    CheckOutcome out;
    out.cases = 1;
    const std::size_t r = rank_of_family(monomial_tables());
    out.passed = r == 10;
    if (!out.passed) fail(out, "rank " + std::to_string(r));
    out.note = "rank " + std::to_string(r);
    return out;
  });
}

CheckOutcome projective_independence() {
  return timed("poisson.rank-modulo-euler", [] {
    CheckOutcome out;
    out.cases = 1;
    const std::size_t r = projective_rank_of_family(monomial_tables());
    out.passed = r == 10;
    if (!out.passed) fail(out, "rank modulo Euler wedges " + std::to_string(r));
    out.note = "rank modulo Euler wedges " + std::to_string(r);
    return out;
  });
}

CheckOutcome ambient_negative_control() {
  return timed("poisson.ambient-negative-control", [] {
    CheckOutcome out;
    std::size_t nonzero = 0;
    std::string first;
    for (const auto& t : monomial_tables()) {
      ++out.cases;
      const Trivector j = jacobiator(t.entries());
      if (j.is_zero()) continue;
      if (!is_poisson_on_P5(t.entries())) continue;
      if (nonzero++ == 0) first = t.label().to_string();
    }
    out.passed = nonzero > 0;
    if (out.passed) {
      out.note = std::to_string(nonzero) + " of 10 ambient Jacobiators nonzero with vanishing chart Jacobiators (first: " +
                 first + ")";
    } else {
      fail(out, "ANOMALY: every ambient Jacobiator vanishes; expected some table to be Poisson only on P^5");
    }
    return out;
  });
}

CheckOutcome ambient_jacobiators_are_euler_wedges() {
  return timed("poisson.ambient-jacobiator-euler-wedge", [] {
    CheckOutcome out;
    out.passed = true;
    for (const auto& t : monomial_tables()) {
      ++out.cases;
      if (!is_euler_wedge(jacobiator(t.entries())))
        fail(out, "ambient Jacobiator of " + t.label().to_string() + " is not E ^ W");
    }
    return out;
  });
}

CheckOutcome projective_equivariance(Twist twist) {
  const std::string name =
      twist == Twist::none ? "poisson.equivariance" : "poisson.equivariance (sign-twisted)";
  return timed(name, [&] {
    CheckOutcome out;
    out.passed = true;
    const auto& tables = monomial_tables();
    std::size_t disagreements = 0;
    for (const auto& sigma : all_permutations(3)) {
      for (const auto& table : tables) {
        ++out.cases;
        const MultiIndex c = table.label().terms().begin()->first;
        const MultiIndex target = sigma.act(c);
        const BracketTable moved = permute_action(sigma, table);
        Bivector expected = tables[table_position(target)].entries();
        if (twist == Twist::sign) expected *= sigma.sign();
        const auto cmp = compare_projective(moved.entries(), expected);
        const std::string where = "sigma=" + sigma_name(sigma) + " c=" + c.to_string();
        if (!cmp.routes_agree()) {
          ++disagreements;
          fail(out, "projective_equal routes disagree at " + where);
        } else if (!cmp.linear_route) {
          fail(out, "not projectively equal at " + where);
        }
      }
    }
    out.note = "routes agree on " + std::to_string(out.cases - disagreements) + "/" + std::to_string(out.cases) +
               " instances";
    return out;
  });
}

CheckOutcome ambient_equivariance() {
  return timed("poisson.ambient-equivariance (informational)", [] {
    CheckOutcome out;
    out.passed = true;
    const auto& tables = monomial_tables();
    std::size_t plain = 0;
    std::size_t twisted = 0;
    std::string holds;
    for (const auto& sigma : all_permutations(3)) {
      for (const auto& table : tables) {
        ++out.cases;
        const BracketTable moved = permute_action(sigma, table);
        const MultiIndex c = table.label().terms().begin()->first;
        const Bivector& expected = tables[table_position(sigma.act(c))].entries();
        if (moved.entries() == expected) {
          ++plain;
          if (sigma != Permutation::identity(3)) holds += " " + sigma_name(sigma) + "@" + c.compact();
        }
        if (moved.entries() == Rational(sigma.sign()) * expected) ++twisted;
      }
    }
    out.note = "exact ambient equality: " + std::to_string(plain) + "/60 untwisted, " + std::to_string(twisted) +
               "/60 sign-twisted; non-identity untwisted hits:" + (holds.empty() ? std::string(" none") : holds);
    return out;
  });
}

CheckOutcome detects_corruption() {
  return timed("poisson.detects-corruption", [] {
    CheckOutcome out;
    out.cases = 1;
    Bivector pi = monomial_tables()[table_position({0, 0, 3})].entries();
    Polynomial p = pi.upper(0, 3);
    p.add_term(p.terms().begin()->first, 1);
    pi.set(0, 3, p);
    const auto check = is_poisson_on_P5(pi);
    out.passed = !check.holds && check.witness.has_value();
    if (!out.passed) fail(out, "perturbed table was accepted");
    else out.note = "rejected: " + check.witness->describe();
    return out;
  });
}

}  // namespace checks

VerifyReport run_suite(Suite suite, const SweepOptions& options) {
  VerifyReport report;
  auto add = [&](CheckOutcome c) { report.checks.push_back(std::move(c)); };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::cech) {
    add(checks::homotopy_identities(2, 4, options));
    add(checks::homotopy_identities(1, 4, options));
    add(checks::homotopy_identities(3, 2, options));
    add(checks::cech_products(2, 3, 2000, options));
    add(checks::cech_products(3, 2, 500, options));
  }
  if (all || suite == Suite::ainf) {
    add(checks::tree_enumeration());
    add(checks::m4_equivalence(options));
  }
  if (all || suite == Suite::tables) {
    add(checks::rho_consistency(options));
    add(checks::bracket_oracle(M4Engine::closed_form, options));
    add(checks::bracket_oracle(M4Engine::trees, options));
    add(checks::skew_and_grading());
    add(checks::integer_coefficients());
    add(checks::permutation_support());
  }
  if (all || suite == Suite::poisson) {
    add(checks::jacobi_on_charts(options));
    add(checks::compatibility_on_charts(options));
    add(checks::random_pencils(20, 7));
    add(checks::fermat_cubic());
    add(checks::linear_independence());
    add(checks::projective_independence());
    add(checks::ambient_negative_control());
    add(checks::ambient_jacobiators_are_euler_wedges());
    add(checks::projective_equivariance(checks::Twist::sign));
    add(checks::ambient_equivariance());
    add(checks::detects_corruption());
  }
  return report;
}

}  // namespace decabracket
