#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "decabracket/io.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string(DECABRACKET_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(CliTables, JsonIsStableAndRoundTrips) {
  const CliResult first = run("tables --format json");
  const CliResult second = run("tables --format json");
  ASSERT_EQ(first.status, 0) << first.out;
  EXPECT_EQ(first.out, second.out);
  const auto doc = decabracket::io::Json::parse(first.out);
  EXPECT_EQ(doc["schema-version"], "decabracket/1");
  EXPECT_EQ(doc["tables"].size(), 10U);
  for (const auto& t : doc["tables"]) EXPECT_EQ(t["entries"].size(), 15U);
  const auto parsed = decabracket::io::parse_table_document(doc);
  const auto& tables = decabracket::monomial_tables();
  ASSERT_EQ(parsed.size(), tables.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) EXPECT_EQ(parsed[i], tables[i]);
}

TEST(CliTables, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "decabracket_tables_test.json";
  std::filesystem::remove(path);
  const CliResult r = run("tables --format json --out " + path.string());
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("tables --format json").out);
  std::filesystem::remove(path);
}

TEST(CliTables, TextAndLatex) {
  const CliResult text = run("tables --format text");
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("{y200, y020} = -2*y110*y002 - 2*y101*y011"), std::string::npos);
  const CliResult tex = run("tables --format latex");
  ASSERT_EQ(tex.status, 0);
  EXPECT_NE(tex.out.find("align*"), std::string::npos);
}

TEST(CliTables, UnknownFormatIsUsageError) {
  const CliResult r = run("tables --format yaml");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("--format"), std::string::npos);
}

TEST(CliBracket, GoldenExampleAndSkew) {
  const CliResult r = run("bracket --F 'x2^3' --a 'x0^2' --b 'x1^2'");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("-2*y110*y002 - 2*y101*y011"), std::string::npos) << r.out;
  const CliResult diag = run("bracket --F 'x2^3' --a 'x0^2' --b 'x0^2'");
  ASSERT_EQ(diag.status, 0);
  EXPECT_NE(diag.out.find("= 0"), std::string::npos) << diag.out;
}

TEST(CliBracket, FermatIsSumOfMonomialResults) {
  const CliResult fermat = run("bracket --F 'x0^3+x1^3+x2^3' --a 'x0*x1' --b 'x2^2' --format json");
  const CliResult list = run("bracket --F 1,0,0,0,0,0,1,0,0,1 --a 1,1,0 --b 0,0,2 --format json");
  ASSERT_EQ(fermat.status, 0) << fermat.out;
  const auto a = decabracket::io::Json::parse(fermat.out);
  const auto b = decabracket::io::Json::parse(list.out);
  EXPECT_EQ(a["terms"], b["terms"]);
  decabracket::Polynomial sum(6);
  for (const auto& c : {decabracket::MultiIndex{3, 0, 0}, {0, 3, 0}, {0, 0, 3}})
    sum += decabracket::bracket_entry(c, {1, 1, 0}, {0, 0, 2});
  EXPECT_EQ(a["terms"].size(), sum.term_count());
}

TEST(CliBracket, UsageErrorsNameTheArgument) {
  const CliResult wrong_degree = run("bracket --F 'x2^3' --a 'x0' --b 'x1^2'");
  EXPECT_EQ(wrong_degree.status, 2);
  EXPECT_NE(wrong_degree.out.find("--a"), std::string::npos) << wrong_degree.out;
  const CliResult malformed = run("bracket --F 'x2^3' --a 'x0^2' --b 'y1^2'");
  EXPECT_EQ(malformed.status, 2);
  EXPECT_NE(malformed.out.find("--b"), std::string::npos) << malformed.out;
  const CliResult bad_f = run("bracket --F 'x0^2' --a 'x0^2' --b 'x1^2'");
  EXPECT_EQ(bad_f.status, 2);
  EXPECT_NE(bad_f.out.find("--F"), std::string::npos) << bad_f.out;
}

TEST(CliM4, Example) {
  const CliResult r = run("m4 --ordering efgh --alpha -2,-2,-1 --a 2,0,0 --b 0,2,0 --c 0,0,3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("closed-form: -1 · x^(0,0,2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("tree: -1 · x^(0,0,2)"), std::string::npos);
  EXPECT_NE(r.out.find("agreement: true"), std::string::npos);
}

TEST(CliM4, VanishingCase) {
  const CliResult r = run("m4 --ordering fghe --alpha -2,-2,-1 --a 2,0,0 --b 0,2,0 --c 0,0,3");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("closed-form: 0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("agreement: true"), std::string::npos);
}

TEST(CliM4, SlotsAndOutOfScope) {
  const CliResult slots = run("m4 --slot x0^2 --slot h2:-2,-2,-1 --slot x1^2 --slot x2^3");
  ASSERT_EQ(slots.status, 0) << slots.out;
  EXPECT_NE(slots.out.find("ordering: fegh"), std::string::npos) << slots.out;
  const CliResult two = run("m4 --slot h2:-2,-2,-1 --slot h2:-1,-1,-3 --slot x0^2 --slot x1^2");
  EXPECT_NE(two.status, 0);
  EXPECT_NE(two.out.find("out of scope"), std::string::npos) << two.out;
  const CliResult bad = run("m4 --ordering efhg --alpha -2,-2,-1 --a 2,0,0 --b 0,2,0 --c 0,0,3");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("--ordering"), std::string::npos);
}

TEST(CliVerify, SuitesPassAndReport) {
  const CliResult cech = run("verify --suite cech --jobs 2");
  EXPECT_EQ(cech.status, 0) << cech.out;
  EXPECT_NE(cech.out.find("PASS  cech.homotopy-identities"), std::string::npos);
  const CliResult tables = run("verify --suite tables --format json");
  EXPECT_EQ(tables.status, 0) << tables.out;
  const auto doc = decabracket::io::Json::parse(tables.out);
  EXPECT_EQ(doc["passed"], true);
  bool saw_rho = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "tables.rho-tilde-consistency") saw_rho = c["cases"] == 77760;
  EXPECT_TRUE(saw_rho);
  const CliResult bad = run("verify --suite everything");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("--suite"), std::string::npos);
}

TEST(CliUsage, MissingSubcommandFails) { EXPECT_NE(run("").status, 0); }
