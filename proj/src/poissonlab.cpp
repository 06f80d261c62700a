#include "decabracket/poissonlab.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "decabracket/linalg.hpp"

namespace decabracket {

Bivector bivector_of(const BracketTable& table) { return table.entries(); }

ChartBivector chart_restrict(const Bivector& pi, std::size_t chart) {
  const std::size_t d = pi.dim();
  if (pi.variables() != d) throw std::invalid_argument("chart_restrict: components must live on the same coordinates");
  if (chart >= d) throw std::out_of_range("chart_restrict: chart index out of range");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!pi.upper(i, j).is_homogeneous(2))
        throw std::invalid_argument("chart_restrict: components must be homogeneous quadrics");

  const auto local = [chart](std::size_t i) { return i < chart ? i : i - 1; };
  ChartBivector out{chart, Bivector(d - 1, d - 1)};
  for (std::size_t i = 0; i < d; ++i) {
    if (i == chart) continue;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (j == chart) continue;
      Polynomial p = pi.upper(i, j);
      p -= Polynomial::variable(d, i) * pi(chart, j);
      p -= Polynomial::variable(d, j) * pi(i, chart);
      out.components.set(local(i), local(j), p.eliminate_variable(chart, 1));
    }
  }
  return out;
}

namespace {

// sum_l (A^{il} d_l B^{jk} + A^{jl} d_l B^{ki} + A^{kl} d_l B^{ij}) for i < j < k.
Trivector schouten_half(const Bivector& a, const Bivector& b) {
  const std::size_t d = a.dim();
  const std::size_t vars = a.variables();
  if (b.dim() != d || b.variables() != vars) throw std::invalid_argument("jacobiator: shape mismatch");
  if (vars != d) throw std::invalid_argument("jacobiator: components must live on the same coordinates");

  // derivative[(i*d + j)*d + l] = d_l B^{ij}
  std::vector<Polynomial> derivative(d * d * d, Polynomial(vars));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j)
        for (std::size_t l = 0; l < d; ++l) derivative[(i * d + j) * d + l] = b(i, j).derivative(l);

  std::vector<Polynomial> dense_a(d * d, Polynomial(vars));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) dense_a[i * d + j] = a(i, j);

  Trivector out(d, vars);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Polynomial sum(vars);
        for (std::size_t l = 0; l < d; ++l) {
          sum += dense_a[i * d + l] * derivative[(j * d + k) * d + l];
          sum += dense_a[j * d + l] * derivative[(k * d + i) * d + l];
          sum += dense_a[k * d + l] * derivative[(i * d + j) * d + l];
        }
        out.set(i, j, k, std::move(sum));
      }
  return out;
}

// Assigns stable column numbers to (component slot, monomial) pairs.
class Flattener {
 public:
  std::size_t column(std::size_t slot, const MultiIndex& monomial) {
    auto [it, inserted] = monomials_.try_emplace(monomial, monomials_.size());
    return slot * kStride + it->second;
  }

  SparseVector flatten(const Bivector& b) {
    std::vector<SparseVector::Entry> entries;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = i + 1; j < b.dim(); ++j, ++slot)
        for (const auto& [e, c] : b.upper(i, j).terms()) entries.emplace_back(column(slot, e), c);
    return SparseVector(std::move(entries));
  }

  SparseVector flatten(const Trivector& t) {
    std::vector<SparseVector::Entry> entries;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = i + 1; j < t.dim(); ++j)
        for (std::size_t k = j + 1; k < t.dim(); ++k, ++slot)
          for (const auto& [e, c] : t.upper(i, j, k).terms()) entries.emplace_back(column(slot, e), c);
    return SparseVector(std::move(entries));
  }

 private:
  static constexpr std::size_t kStride = 1U << 16;
  std::map<MultiIndex, std::size_t> monomials_;
};

std::vector<MultiIndex> monomials_of_degree(std::size_t vars, int degree) {
  std::vector<MultiIndex> out;
  MultiIndex e(vars);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == vars) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (vars > 0) rec(rec, 0, degree);
  return out;
}

// (E ^ V)^{ab} = y_a V^b - y_b V^a.
Bivector euler_wedge(const std::vector<Polynomial>& v) {
  const std::size_t d = v.size();
  Bivector out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      out.set(a, b, Polynomial::variable(d, a) * v[b] - Polynomial::variable(d, b) * v[a]);
  return out;
}

// (E ^ W)^{abc} = y_a W^{bc} + y_b W^{ca} + y_c W^{ab}.
Trivector euler_wedge(const Bivector& w) {
  const std::size_t d = w.dim();
  Trivector out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        out.set(a, b, c,
                Polynomial::variable(d, a) * w(b, c) + Polynomial::variable(d, b) * w(c, a) +
                    Polynomial::variable(d, c) * w(a, b));
  return out;
}

// E ^ (y_l d_j) for every j, l.
std::vector<Bivector> euler_bivector_generators(std::size_t d) {
  std::vector<Bivector> out;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) {
      std::vector<Polynomial> v(d, Polynomial(d));
      v[j] = Polynomial::variable(d, l);
      out.push_back(euler_wedge(v));
    }
  return out;
}

bool in_span_checked(const std::vector<SparseVector>& generators, const SparseVector& target) {
  const auto solution = solve_combination(generators, target);
  if (!solution) return false;
  // Substitute back: the combination must reproduce the target exactly.
  SparseVector rebuilt;
  for (std::size_t g = 0; g < generators.size(); ++g) rebuilt.axpy((*solution)[g], generators[g]);
  if (!(rebuilt == target)) throw std::logic_error("linear solve returned a non-solution");
  return true;
}

}  // namespace

Trivector jacobiator(const Bivector& pi) { return schouten_half(pi, pi); }

Trivector mixed_jacobiator(const Bivector& p1, const Bivector& p2) {
  return schouten_half(p1, p2) + schouten_half(p2, p1);
}

std::string JacobiWitness::describe() const {
  std::ostringstream os;
  os << "chart " << chart << ", component (" << component[0] << ',' << component[1] << ',' << component[2]
     << "): " << value.to_string(indexed_names("u", value.variables()));
  return os.str();
}

namespace {

PoissonCheck first_nonzero(const Trivector& j, std::size_t chart) {
  for (std::size_t a = 0; a < j.dim(); ++a)
    for (std::size_t b = a + 1; b < j.dim(); ++b)
      for (std::size_t c = b + 1; c < j.dim(); ++c)
        if (!j.upper(a, b, c).is_zero())
          return PoissonCheck{false, JacobiWitness{chart, {a, b, c}, j.upper(a, b, c)}};
  return PoissonCheck{};
}

}  // namespace

PoissonCheck is_poisson_on_P5(const Bivector& pi) {
  for (std::size_t m = 0; m < pi.dim(); ++m) {
    const auto check = first_nonzero(jacobiator(chart_restrict(pi, m).components), m);
    if (!check) return check;
  }
  return PoissonCheck{};
}

PoissonCheck is_compatible_on_P5(const Bivector& p1, const Bivector& p2) {
  for (std::size_t m = 0; m < p1.dim(); ++m) {
    const auto check =
        first_nonzero(mixed_jacobiator(chart_restrict(p1, m).components, chart_restrict(p2, m).components), m);
    if (!check) return check;
  }
  return PoissonCheck{};
}

bool is_euler_wedge(const Bivector& d) {
  if (d.variables() != d.dim()) throw std::invalid_argument("is_euler_wedge: components must live on the same coordinates");
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = i + 1; j < d.dim(); ++j)
      if (!d.upper(i, j).is_homogeneous(2))
        throw std::invalid_argument("is_euler_wedge: components must be homogeneous quadrics");
  Flattener flat;
  std::vector<SparseVector> generators;
  for (const auto& g : euler_bivector_generators(d.dim())) generators.push_back(flat.flatten(g));
  return in_span_checked(generators, flat.flatten(d));
}

bool vanishes_on_charts(const Bivector& d) {
  for (std::size_t m = 0; m < d.dim(); ++m)
    if (!chart_restrict(d, m).components.is_zero()) return false;
  return true;
}

bool is_euler_wedge(const Trivector& j) {
  const std::size_t d = j.dim();
  if (j.variables() != d) throw std::invalid_argument("is_euler_wedge: components must live on the same coordinates");
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        if (!j.upper(a, b, c).is_homogeneous(3))
          throw std::invalid_argument("is_euler_wedge: components must be homogeneous cubics");

  Flattener flat;
  std::vector<SparseVector> generators;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (const auto& m : monomials_of_degree(d, 2)) {
        Bivector w(d, d);
        w.set(a, b, Polynomial::monomial(m));
        generators.push_back(flat.flatten(euler_wedge(w)));
      }
  return in_span_checked(generators, flat.flatten(j));
}

ProjectiveComparison compare_projective(const Bivector& p1, const Bivector& p2) {
  const Bivector diff = p1 - p2;
  return ProjectiveComparison{is_euler_wedge(diff), vanishes_on_charts(diff)};
}

bool projective_equal(const Bivector& p1, const Bivector& p2) {
  const auto cmp = compare_projective(p1, p2);
  if (!cmp.routes_agree()) throw std::logic_error("projective_equal: linear and chart routes disagree");
  return cmp.linear_route;
}

std::size_t rank_of_family(std::span<const BracketTable> tables) {
  Flattener flat;
  std::vector<SparseVector> rows;
  for (const auto& t : tables) rows.push_back(flat.flatten(t.entries()));
  return rank(rows);
}

std::size_t projective_rank_of_family(std::span<const BracketTable> tables) {
  Flattener flat;
  std::vector<SparseVector> euler;
  for (const auto& g : euler_bivector_generators(kCoordinates)) euler.push_back(flat.flatten(g));
  std::vector<SparseVector> all = euler;
  for (const auto& t : tables) all.push_back(flat.flatten(t.entries()));
  return rank(all) - rank(euler);
}

BracketTable permute_action(const Permutation& sigma, const BracketTable& table) {
  if (sigma.size() != 3) throw std::invalid_argument("permute_action: expected a permutation of {0,1,2}");
  const auto& d2 = quadric_exponents();
  std::vector<std::size_t> coordinate_map(kCoordinates);
  for (std::size_t i = 0; i < kCoordinates; ++i) coordinate_map[i] = coordinate_index(sigma.act(d2[i]));

  const std::vector<std::size_t> position_map = {sigma(0), sigma(1), sigma(2)};
  Polynomial label = table.label().rename(position_map, 3);

  Bivector entries(kCoordinates, kCoordinates);
  for (std::size_t i = 0; i < kCoordinates; ++i)
    for (std::size_t j = i + 1; j < kCoordinates; ++j)
      entries.set(coordinate_map[i], coordinate_map[j],
                  table.entries().upper(i, j).rename(coordinate_map, kCoordinates));
  return BracketTable(std::move(label), std::move(entries));
}

}  // namespace decabracket
