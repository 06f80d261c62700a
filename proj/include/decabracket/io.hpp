#pragma once

// Text formats: the JSON table document, human-readable and LaTeX renderings,
// and parsers for the command-line argument syntax.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "decabracket/ainf.hpp"
#include "decabracket/fobracket.hpp"

namespace decabracket::io {

inline constexpr std::string_view kSchemaVersion = "decabracket/1";

/// Malformed command-line input. The message names the offending argument.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, text, latex };

/// "json", "text" or "latex"; UsageError otherwise.
Format parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

/// {"schema-version", "coordinate-order", "tables": [{c, entries: [{a, b, terms}]}]}.
/// Every i < j pair is listed, including zero entries. Term pairs are
/// ordered (aprime before or equal to bprime); coefficients are strings.
Json table_document(std::span<const BracketTable> tables);

/// Inverse of table_document for monomial-labelled tables.
/// Throws std::invalid_argument on a malformed document.
std::vector<BracketTable> parse_table_document(const Json& document);

/// One line per nonzero entry: "{y200, y020} = -2*y110*y002 - 2*y101*y011".
std::string render_tables_text(std::span<const BracketTable> tables);
std::string render_tables_latex(std::span<const BracketTable> tables);

/// Sum of terms like "x0^2*x1", "-3/2*x2^3", "+ 4". Whitespace is ignored.
/// Throws UsageError mentioning `argument` on bad syntax.
Polynomial parse_polynomial(std::string_view text, std::size_t variables, std::string_view argument);

/// A cubic given either as a polynomial string or as ten comma-separated
/// coefficients in Delta(3) order. Must be homogeneous of degree 3.
Polynomial parse_cubic(std::string_view text, std::string_view argument);

/// A monomial of the given degree, as "x0*x1" or as an exponent triple "1,1,0".
MultiIndex parse_monomial(std::string_view text, int degree, std::string_view argument);

/// An integer triple "-2,-2,-1", optionally in parentheses.
MultiIndex parse_triple(std::string_view text, std::string_view argument);

/// {x^a, x^b}_F in the requested format.
std::string render_bracket(const Polynomial& cubic, const MultiIndex& a, const MultiIndex& b,
                           const Polynomial& value, Format format);

/// "c · x^(e)" terms joined by " + ", or "0".
std::string render_h0(const Polynomial& p);

/// Closed form, tree value and agreement for one m4 evaluation.
std::string render_m4(M4Ordering ordering, const std::vector<HElement>& args, const HElement& closed,
                      const HElement& tree, Format format);

}  // namespace decabracket::io
