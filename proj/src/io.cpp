#include "decabracket/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace decabracket::io {

namespace {

Json triple_json(const MultiIndex& m) {
  Json out = Json::array();
  for (int v : m) out.push_back(v);
  return out;
}

MultiIndex triple_from_json(const Json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument(std::string(what) + ": expected a triple");
  MultiIndex m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    m[i] = j[i].get<int>();
  }
  return m;
}

// Splits a degree-2 monomial in the six coordinates into its two coordinate
// positions, first <= second.
std::pair<std::size_t, std::size_t> coordinate_pair(const MultiIndex& e) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) slots.push_back(i);
  if (slots.size() != 2) throw std::logic_error("table entry is not quadratic");
  return {slots[0], slots[1]};
}

std::string latex_coordinate(std::size_t i) { return "y_{" + quadric_exponents()[i].compact() + "}"; }

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const int s = sgn(c);
    if (first) {
      if (s < 0) out += "-";
    } else {
      out += s < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + "\\,";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += latex_coordinate(i);
      if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
    }
  }
  return out;
}

std::string latex_label(const Polynomial& f) {
  std::string out = f.to_string();
  std::string clean;
  for (char ch : out)
    if (ch != '*') clean += ch;
  // x0^3 -> x_0^{3}
  std::string result;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] == 'x' && i + 1 < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i + 1]))) {
      result += "x_";
      result += clean[++i];
    } else if (clean[i] == '^' && i + 1 < clean.size()) {
      result += "^{";
      while (i + 1 < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i + 1]))) result += clean[++i];
      result += "}";
    } else {
      result += clean[i];
    }
  }
  return result;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

[[noreturn]] void usage(std::string_view argument, const std::string& message) {
  throw UsageError(std::string(argument) + ": " + message);
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// term := [coefficient] ('*' factor)* | factor ('*' factor)*
// coefficient := digits ['/' digits]; factor := 'x' digits ['^' digits]
void parse_term(std::string_view term, int sign, std::size_t variables, std::string_view argument,
                Polynomial& out) {
  if (term.empty()) usage(argument, "empty term");
  Rational coefficient = sign;
  MultiIndex exponent(variables);
  bool seen_coefficient = false;
  std::size_t pos = 0;
  while (pos <= term.size()) {
    const std::size_t star = term.find('*', pos);
    const std::string_view factor = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (factor.empty()) usage(argument, "empty factor in '" + std::string(term) + "'");
    if (factor.front() == 'x') {
      const std::size_t caret = factor.find('^');
      long index = 0;
      long power = 1;
      if (!parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), index))
        usage(argument, "bad variable '" + std::string(factor) + "'");
      if (caret != std::string_view::npos && (!parse_int(factor.substr(caret + 1), power) || power < 0))
        usage(argument, "bad exponent in '" + std::string(factor) + "'");
      if (index < 0 || static_cast<std::size_t>(index) >= variables)
        usage(argument, "variable '" + std::string(factor) + "' out of range (expected x0..x" +
                            std::to_string(variables - 1) + ")");
      exponent[static_cast<std::size_t>(index)] += static_cast<int>(power);
    } else {
      if (seen_coefficient || pos != 0) usage(argument, "coefficient must lead the term '" + std::string(term) + "'");
      const std::size_t slash = factor.find('/');
      long num = 0;
      long den = 1;
      if (!parse_int(factor.substr(0, slash), num) ||
          (slash != std::string_view::npos && (!parse_int(factor.substr(slash + 1), den) || den <= 0)))
        usage(argument, "bad coefficient '" + std::string(factor) + "'");
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      coefficient *= q;
      seen_coefficient = true;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  out.add_term(exponent, coefficient);
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  if (text == "latex") return Format::latex;
  throw UsageError("--format: unknown format '" + std::string(text) + "' (expected json, text or latex)");
}

Json table_document(std::span<const BracketTable> tables) {
  const auto& d2 = quadric_exponents();
  Json doc;
  doc["schema-version"] = std::string(kSchemaVersion);
  Json order = Json::array();
  for (const auto& a : d2) order.push_back(triple_json(a));
  doc["coordinate-order"] = std::move(order);

  Json list = Json::array();
  for (const auto& table : tables) {
    const auto& label = table.label();
    if (label.term_count() != 1 || label.terms().begin()->second != 1)
      throw std::invalid_argument("table_document: only monomial-labelled tables are serialized");
    Json t;
    t["c"] = triple_json(label.terms().begin()->first);
    Json entries = Json::array();
    for (std::size_t i = 0; i < d2.size(); ++i) {
      for (std::size_t j = i + 1; j < d2.size(); ++j) {
        Json entry;
        entry["a"] = triple_json(d2[i]);
        entry["b"] = triple_json(d2[j]);
        Json terms = Json::array();
        for (const auto& [e, coeff] : table.entries().upper(i, j).terms()) {
          const auto [p, q] = coordinate_pair(e);
          Json term;
          term["aprime"] = triple_json(d2[p]);
          term["bprime"] = triple_json(d2[q]);
          term["coeff"] = to_string(coeff);
          terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        entries.push_back(std::move(entry));
      }
    }
    t["entries"] = std::move(entries);
    list.push_back(std::move(t));
  }
  doc["tables"] = std::move(list);
  return doc;
}

std::vector<BracketTable> parse_table_document(const Json& document) {
  if (!document.is_object()) throw std::invalid_argument("table document: expected an object");
  if (document.value("schema-version", std::string()) != kSchemaVersion)
    throw std::invalid_argument("table document: unsupported schema-version");
  const auto& d2 = quadric_exponents();
  const Json& order = document.at("coordinate-order");
  if (!order.is_array() || order.size() != d2.size())
    throw std::invalid_argument("table document: coordinate-order must list six triples");
  for (std::size_t i = 0; i < d2.size(); ++i)
    if (triple_from_json(order[i], "coordinate-order") != d2[i])
      throw std::invalid_argument("table document: coordinate-order is not canonical");

  std::vector<BracketTable> out;
  for (const Json& t : document.at("tables")) {
    const MultiIndex c = triple_from_json(t.at("c"), "c");
    if (!c.all_nonnegative() || c.sum() != 3) throw std::invalid_argument("table document: c must be in Delta(3)");
    Bivector entries(kCoordinates, kCoordinates);
    std::vector<bool> seen(d2.size() * d2.size(), false);
    for (const Json& entry : t.at("entries")) {
      const std::size_t i = coordinate_index(triple_from_json(entry.at("a"), "a"));
      const std::size_t j = coordinate_index(triple_from_json(entry.at("b"), "b"));
      if (i >= j) throw std::invalid_argument("table document: entries must have a before b");
      if (seen[i * d2.size() + j]) throw std::invalid_argument("table document: duplicate entry");
      seen[i * d2.size() + j] = true;
      Polynomial p(kCoordinates);
      for (const Json& term : entry.at("terms")) {
        const MultiIndex ap = triple_from_json(term.at("aprime"), "aprime");
        const MultiIndex bp = triple_from_json(term.at("bprime"), "bprime");
        const Json& coeff = term.at("coeff");
        if (!coeff.is_string()) throw std::invalid_argument("table document: coeff must be a string");
        Rational q;
        if (q.set_str(coeff.get<std::string>(), 10) != 0)
          throw std::invalid_argument("table document: bad coefficient '" + coeff.get<std::string>() + "'");
        q.canonicalize();
        p += coordinate_product(ap, bp) * q;
      }
      entries.set(i, j, p);
    }
    out.emplace_back(Polynomial::monomial(c), std::move(entries));
  }
  return out;
}

std::string render_tables_text(std::span<const BracketTable> tables) {
  const auto& names = coordinate_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& table : tables) {
    if (!first) os << '\n';
    first = false;
    os << "# F = " << table.label().to_string() << '\n';
    for (std::size_t i = 0; i < kCoordinates; ++i)
      for (std::size_t j = i + 1; j < kCoordinates; ++j) {
        const Polynomial& p = table.entries().upper(i, j);
        if (p.is_zero()) continue;
        os << '{' << names[i] << ", " << names[j] << "} = " << p.to_string(names) << '\n';
      }
  }
  return os.str();
}

std::string render_tables_latex(std::span<const BracketTable> tables) {
  std::ostringstream os;
  for (const auto& table : tables) {
    os << "% F = " << table.label().to_string() << '\n';
    os << "\\begin{align*}\n";
    bool any = false;
    for (std::size_t i = 0; i < kCoordinates; ++i)
      for (std::size_t j = i + 1; j < kCoordinates; ++j) {
        const Polynomial& p = table.entries().upper(i, j);
        if (p.is_zero()) continue;
        if (any) os << " \\\\\n";
        any = true;
        os << "  \\{" << latex_coordinate(i) << ", " << latex_coordinate(j) << "\\}_{" << latex_label(table.label())
           << "} &= " << latex_polynomial(p);
      }
    os << "\n\\end{align*}\n";
  }
  return os.str();
}

Polynomial parse_polynomial(std::string_view text, std::size_t variables, std::string_view argument) {
  const std::string s = trim(text);
  if (s.empty()) usage(argument, "empty polynomial");
  Polynomial out(variables);
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  while (true) {
    std::size_t next = s.find_first_of("+-", pos);
    // A sign directly after '^' or '/' belongs to a number, not a term break.
    while (next != std::string::npos && next > 0 && (s[next - 1] == '^' || s[next - 1] == '/' || s[next - 1] == '*'))
      next = s.find_first_of("+-", next + 1);
    parse_term(std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos), sign,
               variables, argument, out);
    if (next == std::string::npos) break;
    sign = s[next] == '-' ? -1 : 1;
    pos = next + 1;
  }
  return out;
}

Polynomial parse_cubic(std::string_view text, std::string_view argument) {
  const std::string s = trim(text);
  Polynomial f(3);
  if (s.find('x') == std::string::npos && s.find(',') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    const auto& d3 = cubic_exponents();
    if (parts.size() != d3.size())
      usage(argument, "coefficient list needs " + std::to_string(d3.size()) + " entries in Delta(3) order, got " +
                          std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Rational q;
      if (parts[i].empty() || q.set_str(parts[i][0] == '+' ? parts[i].substr(1) : parts[i], 10) != 0)
        usage(argument, "bad coefficient '" + parts[i] + "'");
      q.canonicalize();
      f.add_term(d3[i], q);
    }
  } else {
    f = parse_polynomial(s, 3, argument);
  }
  if (f.is_zero()) usage(argument, "F is zero");
  if (!f.is_homogeneous(3)) usage(argument, "F must be homogeneous of degree 3");
  return f;
}

MultiIndex parse_monomial(std::string_view text, int degree, std::string_view argument) {
  const std::string s = trim(text);
  MultiIndex e(3);
  if (s.find('x') == std::string::npos) {
    e = parse_triple(s, argument);
    if (!e.all_nonnegative()) usage(argument, "exponents must be nonnegative");
  } else {
    const Polynomial p = parse_polynomial(s, 3, argument);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
      usage(argument, "expected a single monomial such as x0*x1, got '" + s + "'");
    e = p.terms().begin()->first;
  }
  if (e.sum() != degree)
    usage(argument, "expected degree " + std::to_string(degree) + ", got degree " + std::to_string(e.sum()));
  return e;
}

MultiIndex parse_triple(std::string_view text, std::string_view argument) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 3) usage(argument, "expected three comma-separated integers, got '" + std::string(text) + "'");
  MultiIndex m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    long v = 0;
    if (!parse_int(parts[i], v) || v < -1000 || v > 1000) usage(argument, "bad integer '" + parts[i] + "'");
    m[i] = static_cast<int>(v);
  }
  return m;
}

std::string render_bracket(const Polynomial& cubic, const MultiIndex& a, const MultiIndex& b,
                           const Polynomial& value, Format format) {
  const std::string fa = Polynomial::monomial(a).to_string();
  const std::string fb = Polynomial::monomial(b).to_string();
  switch (format) {
    case Format::json: {
      Json doc;
      doc["schema-version"] = std::string(kSchemaVersion);
      doc["F"] = cubic.to_string();
      doc["a"] = triple_json(a);
      doc["b"] = triple_json(b);
      Json terms = Json::array();
      const auto& d2 = quadric_exponents();
      for (const auto& [e, coeff] : value.terms()) {
        const auto [p, q] = coordinate_pair(e);
        Json term;
        term["aprime"] = triple_json(d2[p]);
        term["bprime"] = triple_json(d2[q]);
        term["coeff"] = to_string(coeff);
        terms.push_back(std::move(term));
      }
      doc["terms"] = std::move(terms);
      return doc.dump(2) + "\n";
    }
    case Format::text:
      return "{" + fa + ", " + fb + "}_F = " + value.to_string(coordinate_names()) + "\n";
    case Format::latex:
      return "\\{" + latex_label(Polynomial::monomial(a)) + ", " + latex_label(Polynomial::monomial(b)) + "\\}_{" +
             latex_label(cubic) + "} = " + latex_polynomial(value) + "\n";
  }
  return {};
}

std::string render_h0(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + " · x^" + e.to_string();
  }
  return out;
}

std::string render_m4(M4Ordering ordering, const std::vector<HElement>& args, const HElement& closed,
                      const HElement& tree, Format format) {
  const bool agree = closed == tree;
  switch (format) {
    case Format::json: {
      Json doc;
      doc["schema-version"] = std::string(kSchemaVersion);
      doc["ordering"] = std::string(to_string(ordering));
      Json slots = Json::array();
      for (const auto& h : args) slots.push_back(h.to_string());
      doc["arguments"] = std::move(slots);
      doc["closed-form"] = render_h0(closed.degree_zero());
      doc["tree"] = render_h0(tree.degree_zero());
      doc["agreement"] = agree;
      return doc.dump(2) + "\n";
    }
    case Format::text: {
      std::string out = "ordering: " + std::string(to_string(ordering)) + "\n";
      out += "closed-form: " + render_h0(closed.degree_zero()) + "\n";
      out += "tree: " + render_h0(tree.degree_zero()) + "\n";
      out += std::string("agreement: ") + (agree ? "true" : "false") + "\n";
      return out;
    }
    case Format::latex: {
      auto tex = [](const Polynomial& p) {
        if (p.is_zero()) return std::string("0");
        std::string out;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
          if (!first) out += " + ";
          first = false;
          out += to_string(c) + "\\cdot x^{" + e.to_string() + "}";
        }
        return out;
      };
      return "m_4^{\\mathrm{closed}} = " + tex(closed.degree_zero()) + ",\\quad m_4^{\\mathrm{tree}} = " +
             tex(tree.degree_zero()) + "\n";
    }
  }
  return {};
}

}  // namespace decabracket::io
