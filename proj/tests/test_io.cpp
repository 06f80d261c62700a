#include <gtest/gtest.h>

#include "decabracket/io.hpp"

using namespace decabracket;
using namespace decabracket::io;

TEST(TableDocument, ShapeAndOrder) {
  const Json doc = table_document(monomial_tables());
  EXPECT_EQ(doc["schema-version"], "decabracket/1");
  ASSERT_EQ(doc["coordinate-order"].size(), 6U);
  EXPECT_EQ(doc["coordinate-order"][1], Json::parse("[1,1,0]"));
  ASSERT_EQ(doc["tables"].size(), 10U);
  for (const auto& t : doc["tables"]) {
    ASSERT_EQ(t["entries"].size(), 15U);
    for (const auto& e : t["entries"])
      for (const auto& term : e["terms"]) EXPECT_TRUE(term["coeff"].is_string());
  }
}

TEST(TableDocument, GoldenEntry) {
  const Json doc = table_document(monomial_tables());
  const Json* table = nullptr;
  for (const auto& t : doc["tables"])
    if (t["c"] == Json::parse("[0,0,3]")) table = &t;
  ASSERT_NE(table, nullptr);
  const Json& entry = (*table)["entries"][2];  // (200, 020) is the third pair
  EXPECT_EQ(entry["a"], Json::parse("[2,0,0]"));
  EXPECT_EQ(entry["b"], Json::parse("[0,2,0]"));
  ASSERT_EQ(entry["terms"].size(), 2U);
  EXPECT_EQ(entry["terms"][0]["aprime"], Json::parse("[1,1,0]"));
  EXPECT_EQ(entry["terms"][0]["bprime"], Json::parse("[0,0,2]"));
  EXPECT_EQ(entry["terms"][0]["coeff"], "-2");
  EXPECT_EQ(entry["terms"][1]["aprime"], Json::parse("[1,0,1]"));
  EXPECT_EQ(entry["terms"][1]["bprime"], Json::parse("[0,1,1]"));
  EXPECT_EQ(entry["terms"][1]["coeff"], "-2");
}

TEST(TableDocument, RoundTrip) {
  const auto& tables = monomial_tables();
  const Json doc = table_document(tables);
  const auto parsed = parse_table_document(Json::parse(doc.dump()));
  ASSERT_EQ(parsed.size(), tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) EXPECT_EQ(parsed[i], tables[i]);
  EXPECT_EQ(table_document(parsed).dump(), doc.dump());
}

TEST(TableDocument, RejectsTampering) {
  Json doc = table_document(monomial_tables());
  Json bad_version = doc;
  bad_version["schema-version"] = "decabracket/0";
  EXPECT_THROW(parse_table_document(bad_version), std::invalid_argument);
  Json bad_order = doc;
  std::swap(bad_order["coordinate-order"][0], bad_order["coordinate-order"][1]);
  EXPECT_THROW(parse_table_document(bad_order), std::invalid_argument);
  Json bad_pair = doc;
  std::swap(bad_pair["tables"][0]["entries"][0]["a"], bad_pair["tables"][0]["entries"][0]["b"]);
  EXPECT_THROW(parse_table_document(bad_pair), std::invalid_argument);
  Json bad_coeff = doc;
  bad_coeff["tables"][9]["entries"][2]["terms"][0]["coeff"] = -2;
  EXPECT_THROW(parse_table_document(bad_coeff), std::invalid_argument);
}

TEST(Render, TextListsNonzeroEntries) {
  const std::string text = render_tables_text(monomial_tables());
  EXPECT_NE(text.find("{y200, y020} = -2*y110*y002 - 2*y101*y011"), std::string::npos);
  EXPECT_EQ(text.find("= 0\n"), std::string::npos);
  const std::string tex = render_tables_latex(monomial_tables());
  EXPECT_NE(tex.find("\\begin{align*}"), std::string::npos);
  EXPECT_NE(tex.find("-2\\,y_{110}y_{002}"), std::string::npos);
}

TEST(Parse, Polynomials) {
  const Polynomial p = parse_polynomial("x0^2*x1 - 3/2*x2^3 + 4", 3, "--F");
  Polynomial expected(3);
  expected.add_term({2, 1, 0}, 1);
  expected.add_term({0, 0, 3}, Rational(-3, 2));
  expected.add_term({0, 0, 0}, 4);
  EXPECT_EQ(p, expected);
  EXPECT_EQ(parse_polynomial(" -x0 * x0 ", 3, "--F"), Polynomial::monomial({2, 0, 0}, -1));
  EXPECT_EQ(parse_polynomial("x1*x0", 3, "--a"), Polynomial::monomial({1, 1, 0}));
}

TEST(Parse, ErrorsNameTheArgument) {
  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message([] { parse_polynomial("x3^2", 3, "--F"); }).rfind("--F:", 0), 0U);
  EXPECT_EQ(message([] { parse_polynomial("x0^", 3, "--F"); }).rfind("--F:", 0), 0U);
  EXPECT_EQ(message([] { parse_polynomial("x0**x1", 3, "--F"); }).rfind("--F:", 0), 0U);
  EXPECT_EQ(message([] { parse_monomial("x0", 2, "--a"); }).rfind("--a:", 0), 0U);
  EXPECT_EQ(message([] { parse_monomial("x0+x1^2", 2, "--b"); }).rfind("--b:", 0), 0U);
  EXPECT_EQ(message([] { parse_cubic("x0^2", "--F"); }).rfind("--F:", 0), 0U);
  EXPECT_EQ(message([] { parse_cubic("1,2,3", "--F"); }).rfind("--F:", 0), 0U);
  EXPECT_EQ(message([] { parse_triple("1,2", "--alpha"); }).rfind("--alpha:", 0), 0U);
  EXPECT_EQ(message([] { parse_format("yaml"); }).rfind("--format:", 0), 0U);
}

TEST(Parse, CubicForms) {
  EXPECT_EQ(parse_cubic("x2^3", "--F"), Polynomial::monomial({0, 0, 3}));
  Polynomial fermat(3);
  fermat.add_term({3, 0, 0}, 1);
  fermat.add_term({0, 3, 0}, 1);
  fermat.add_term({0, 0, 3}, 1);
  EXPECT_EQ(parse_cubic("1,0,0,0,0,0,1,0,0,1", "--F"), fermat);
  EXPECT_EQ(parse_cubic("x0^3+x1^3+x2^3", "--F"), fermat);
  EXPECT_EQ(parse_monomial("0,1,1", 2, "--a"), (MultiIndex{0, 1, 1}));
  EXPECT_EQ(parse_triple("(-2,-2,-1)", "--alpha"), (MultiIndex{-2, -2, -1}));
}

TEST(Render, M4AndH0) {
  EXPECT_EQ(render_h0(Polynomial::monomial({0, 0, 2}, -1)), "-1 · x^(0,0,2)");
  EXPECT_EQ(render_h0(Polynomial(3)), "0");
}
