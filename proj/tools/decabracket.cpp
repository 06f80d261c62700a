// decabracket: bracket tables, single brackets, m4 values and verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decabracket/ainf.hpp"
#include "decabracket/fobracket.hpp"
#include "decabracket/io.hpp"
#include "decabracket/verify.hpp"

namespace {

using namespace decabracket;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutOfScope = 3;

struct Common {
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_format) {
  common.format = default_format;
  cmd->add_option("--format", common.format, "json, text or latex")->capture_default_str();
  cmd->add_option("--out", common.out, "Write output to this file instead of stdout");
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) throw io::UsageError("--out: cannot open '" + common.out + "' for writing");
  file << text;
}

std::string latex_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "\\begin{tabular}{llrr}\n  check & status & cases & time (s) \\\\\n  \\hline\n";
  for (const auto& c : report.checks) {
    std::string name;
    for (char ch : c.name) name += (ch == '_' || ch == '^' || ch == '&' || ch == '%') ? std::string("\\") + ch : std::string(1, ch);
    os << "  \\texttt{" << name << "} & " << (c.passed ? "pass" : "fail") << " & " << c.cases << " & " << c.seconds
       << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

struct SlotArgs {
  std::vector<std::string> slots;
};

// "h0:2,0,0" / "x0^2" are H^0 monomials, "h2:-2,-2,-1" is a top class.
HElement parse_slot(const std::string& text, std::size_t index) {
  const std::string argument = "--slot #" + std::to_string(index + 1);
  if (text.rfind("h2:", 0) == 0) {
    const MultiIndex alpha = io::parse_triple(text.substr(3), argument);
    if (!alpha.all_negative()) throw io::UsageError(argument + ": an H^2 class needs all exponents negative");
    return HElement::top_monomial(alpha);
  }
  const std::string body = text.rfind("h0:", 0) == 0 ? text.substr(3) : text;
  MultiIndex e(3);
  if (body.find('x') == std::string::npos) {
    e = io::parse_triple(body, argument);
  } else {
    const Polynomial p = io::parse_polynomial(body, 3, argument);
    if (p.term_count() != 1 || p.terms().begin()->second != 1)
      throw io::UsageError(argument + ": expected a single monomial");
    e = p.terms().begin()->first;
  }
  if (!e.all_nonnegative()) throw io::UsageError(argument + ": an H^0 monomial needs nonnegative exponents");
  return HElement::monomial(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feigin-Odesskii bracket tables on P^5: tables, brackets, m4 and verification"};
  app.require_subcommand(1);

  Common tables_opts;
  auto* tables = app.add_subcommand("tables", "Emit the ten monomial bracket tables");
  add_common(tables, tables_opts, "json");

  Common bracket_opts;
  std::string f_text, a_text, b_text;
  auto* bracket = app.add_subcommand("bracket", "Compute {x^a, x^b}_F");
  bracket->add_option("--F,--f", f_text, "Cubic F: polynomial like x0^3+x1*x2^2 or ten coefficients in Delta(3) order")
      ->required();
  bracket->add_option("--a", a_text, "Quadric monomial a, e.g. x0^2 or 2,0,0")->required();
  bracket->add_option("--b", b_text, "Quadric monomial b")->required();
  add_common(bracket, bracket_opts, "text");

  Common m4_opts;
  std::string ordering_text, alpha_text, m4a_text, m4b_text, m4c_text;
  SlotArgs slot_args;
  auto* m4 = app.add_subcommand("m4", "Evaluate m4 by trees and by the closed formulas");
  m4->add_option("--ordering", ordering_text, "efgh, fegh, fgeh or fghe");
  m4->add_option("--alpha", alpha_text, "Exponent of the H^2 class e, e.g. -2,-2,-1");
  m4->add_option("--a", m4a_text, "Exponent of f");
  m4->add_option("--b", m4b_text, "Exponent of g");
  m4->add_option("--c", m4c_text, "Exponent of h");
  m4->add_option("--slot", slot_args.slots, "Four slots in order: h0:TRIPLE, x-monomial, or h2:TRIPLE");
  add_common(m4, m4_opts, "text");

  Common verify_opts;
  std::string suite_text = "all";
  int jobs = 0;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite_text, "all, cech, ainf, tables or poisson")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--serial", serial, "Use the serial reference loops");
  add_common(verify, verify_opts, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tables) {
      const auto format = io::parse_format(tables_opts.format);
      const auto& all = monomial_tables();
      switch (format) {
        case io::Format::json: emit(tables_opts, io::table_document(all).dump(2) + "\n"); break;
        case io::Format::text: emit(tables_opts, io::render_tables_text(all)); break;
        case io::Format::latex: emit(tables_opts, io::render_tables_latex(all)); break;
      }
      return 0;
    }

    if (*bracket) {
      const auto format = io::parse_format(bracket_opts.format);
      const Polynomial f = io::parse_cubic(f_text, "--F");
      const MultiIndex a = io::parse_monomial(a_text, 2, "--a");
      const MultiIndex b = io::parse_monomial(b_text, 2, "--b");
      const BracketTable table = bracket_table(f);
      emit(bracket_opts, io::render_bracket(f, a, b, table.entry(a, b), format));
      return 0;
    }

    if (*m4) {
      const auto format = io::parse_format(m4_opts.format);
      std::vector<HElement> args;
      M4Ordering ordering = M4Ordering::efgh;
      std::optional<M4Value> closed;
      if (!slot_args.slots.empty()) {
        if (slot_args.slots.size() != 4)
          throw io::UsageError("--slot: expected exactly four slots, got " + std::to_string(slot_args.slots.size()));
        std::vector<std::size_t> top;
        for (std::size_t i = 0; i < 4; ++i) {
          args.push_back(parse_slot(slot_args.slots[i], i));
          if (!args.back().top().empty()) top.push_back(i);
        }
        if (top.size() >= 2)
          throw OutOfScopeError("m4: " + std::to_string(top.size()) +
                                " arguments in H^2 requested; only one H^2 argument is supported");
        if (top.empty()) throw io::UsageError("--slot: one slot must be an H^2 class (h2:TRIPLE)");
        ordering = kAllOrderings[top.front()];
        std::vector<MultiIndex> h0;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != top.front()) h0.push_back(args[i].degree_zero().terms().begin()->first);
        closed = m4_closed(ordering, args[top.front()].top().begin()->first, h0[0], h0[1], h0[2]);
      } else {
        if (ordering_text.empty() || alpha_text.empty() || m4a_text.empty() || m4b_text.empty() || m4c_text.empty())
          throw io::UsageError("m4: give --ordering, --alpha, --a, --b and --c, or four --slot values");
        try {
          ordering = parse_ordering(ordering_text);
        } catch (const std::invalid_argument&) {
          throw io::UsageError("--ordering: unknown ordering '" + ordering_text + "' (expected efgh, fegh, fgeh or fghe)");
        }
        const MultiIndex alpha = io::parse_triple(alpha_text, "--alpha");
        const MultiIndex a = io::parse_triple(m4a_text, "--a");
        const MultiIndex b = io::parse_triple(m4b_text, "--b");
        const MultiIndex c = io::parse_triple(m4c_text, "--c");
        if (!alpha.all_negative())
          throw OutOfScopeError("--alpha: " + alpha.to_string() +
                                " is not an H^2 class; m4 with other than one H^2 argument is out of scope");
        for (const auto& [name, v] : {std::pair{"--a", a}, std::pair{"--b", b}, std::pair{"--c", c}})
          if (!v.all_nonnegative())
            throw OutOfScopeError(std::string(name) + ": " + v.to_string() +
                                  " is not an H^0 monomial; two H^2 arguments are out of scope");
        const auto array = m4_arguments(ordering, alpha, a, b, c);
        args.assign(array.begin(), array.end());
        closed = m4_closed(ordering, alpha, a, b, c);
      }
      const HElement tree = m4_tree(std::span<const HElement>(args));
      const HElement closed_element = closed->as_element();
      emit(m4_opts, io::render_m4(ordering, args, closed_element, tree, format));
      return closed_element == tree ? 0 : kExitFailure;
    }

    if (*verify) {
      const auto format = io::parse_format(verify_opts.format);
      Suite suite;
      try {
        suite = parse_suite(suite_text);
      } catch (const std::invalid_argument&) {
        throw io::UsageError("--suite: unknown suite '" + suite_text + "' (expected all, cech, ainf, tables or poisson)");
      }
      SweepOptions options;
      options.backend = serial ? Backend::serial : Backend::openmp;
      options.jobs = jobs;
      const VerifyReport report = run_suite(suite, options);
      switch (format) {
        case io::Format::json: emit(verify_opts, report.to_json().dump(2) + "\n"); break;
        case io::Format::text: emit(verify_opts, report.render_text()); break;
        case io::Format::latex: emit(verify_opts, latex_report(report)); break;
      }
      return report.all_passed() ? 0 : kExitFailure;
    }
  } catch (const io::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfScopeError& e) {
    std::cerr << "out of scope: " << e.what() << '\n';
    return kExitOutOfScope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
