#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "monreg/errors.hpp"
#include "monreg_cli/catalog.hpp"
#include "monreg_cli/commands.hpp"
#include "monreg_cli/problem.hpp"
#include "test_support.hpp"

namespace monreg::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kProblems = MONREG_PROBLEM_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(CommandOptions o) {
  std::ostringstream out, err;
  int code = run(o, out, err);
  return {code, out.str(), err.str()};
}

CommandOptions opts(std::string command, std::string file = "") {
  CommandOptions o;
  o.command = std::move(command);
  if (!file.empty()) o.file = (kProblems / (file + ".problem")).string();
  return o;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

TEST(Parse, IntroFile) {
  ProblemFile p = read_problem_file((kProblems / "intro.problem").string());
  EXPECT_EQ(p.ring.size(), 7u);
  EXPECT_TRUE(p.order_declared);
  EXPECT_EQ(p.order.to_string(p.ring), "lex g f d a b c e");
  EXPECT_EQ(p.ideal.size(), 5u);
  EXPECT_EQ(p.forms.size(), 3u);
  EXPECT_EQ(p.form("f3").sum.to_string(p.ring), "a + c + e");
}

TEST(Parse, Monomials) {
  ProblemFile p = parse_problem("ring: a b c\nideal: a^2*b\n");
  EXPECT_EQ(p.ideal.generators().front(), (Monomial{2, 1, 0}));
  EXPECT_FALSE(p.order_declared);
  EXPECT_EQ(p.order, TermOrder::lex(3));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  try {
    parse_problem("ring: a b\n# comment\nideal: a*z\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_problem("ring: a a\nideal: a\n"), ParseError);
  EXPECT_THROW(parse_problem("ring: a b\nideal: a^*b\n"), ParseError);
  EXPECT_THROW(parse_problem("ring: a b\nideal: a\nform f: a + a\n"), ParseError);
  EXPECT_THROW(parse_problem("ring: a b\n"), ParseError);
  EXPECT_THROW(parse_problem("ring: a b\norder: lex a a\nideal: a\n"), ParseError);
}

TEST(Parse, RoundTripCatalog) {
  for (const auto& entry : catalog::entries()) {
    ProblemFile p = catalog::load(entry.key);
    EXPECT_EQ(parse_problem(to_text(p)), p) << entry.key;
    ProblemFile on_disk = read_problem_file((kProblems / (std::string(entry.key) + ".problem")).string());
    EXPECT_EQ(on_disk, p) << entry.key;
  }
}

TEST(Parse, RoundTripRandom) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 6;
    ProblemFile p{testing::generic_ring(n), trial % 2 == 0, testing::random_order(rng, n),
                  testing::random_ideal(rng, n, 5, 4, 3), {}};
    if (!p.order_declared) p.order = TermOrder::lex(n);
    p.forms.push_back({"f", LinearSum({n - 1, 0})});
    EXPECT_EQ(parse_problem(to_text(p)), p);
  }
}

TEST(Commands, DepthSquareOfTree13) {
  CommandOptions o = opts("depth", "tree-13");
  o.power = 2;
  Invocation r = invoke(o);
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("depth R/I^2 = 4"), std::string::npos);
}

TEST(Commands, GraphBound) {
  CommandOptions o = opts("graph-bound", "pentagon-path");
  o.vertex = "h";
  Invocation r = invoke(o);
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out.substr(0, 2), "4\n");
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(invoke(opts("nope", "intro")).code, kUsage);
  EXPECT_EQ(invoke(opts("depth")).code, kUsage);
  fs::path bad = write_temp("monreg_bad.problem", "ring: a\nideal: a*z\n");
  CommandOptions o = opts("depth");
  o.file = bad.string();
  Invocation r = invoke(o);
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  CommandOptions fail = opts("regular-check", "path-3");
  fail.power = 2;
  fail.form = "f1,f2";
  EXPECT_EQ(invoke(fail).code, kFail);

  CommandOptions colon = opts("colon", "colon-counterexample");
  colon.power = 4;
  EXPECT_EQ(invoke(colon).code, kFail);

  fs::path big = write_temp("monreg_big.problem",
                            "ring: a b c d e f g h i j k l m n o p q r\n"
                            "ideal: a*b b*c c*d d*e e*f f*g g*h h*i i*j j*k k*l l*m m*n n*o o*p p*q q*r a*c\n");
  CommandOptions guard = opts("graph-bound");
  guard.file = big.string();
  guard.vertex = "a";
  EXPECT_EQ(invoke(guard).code, kResource);
}

TEST(Commands, JsonHasStableKeys) {
  for (const std::string& name : command_names()) {
    if (name == "verify-lemmas") continue;
    CommandOptions o = opts(name, name == "graph-bound" ? "pentagon-path"
                                  : name == "leaves-bound" || name == "find-initreg" ? "tree-8"
                                  : name == "colon" ? "six-edge-squares"
                                                    : "path-3");
    o.json = true;
    if (name == "graph-bound") o.vertex = "h";
    if (name == "initial" || name == "star-check" || name == "gb") o.form = "f1";
    if (name == "regular-check") o.form = "f1,f2";
    Invocation r = invoke(o);
    EXPECT_LE(r.code, kFail) << name << ": " << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      ++count;
      auto j = nlohmann::json::parse(line);
      EXPECT_TRUE(j.contains("verdict")) << name;
      EXPECT_TRUE(j.contains("theorem")) << name;
      EXPECT_TRUE(j.contains("elapsed_ms")) << name;
      EXPECT_EQ(j.at("command"), name);
    }
    EXPECT_EQ(count, 1) << name;
  }
}

TEST(Commands, ReportsAreReadable) {
  ProblemFile p = catalog::load("pentagon");
  CommandOptions o;
  o.command = "initial";
  Report r = execute(o, &p);
  ASSERT_FALSE(r.lines.empty());
  EXPECT_EQ(r.lines.front(), "ini(I, x1 + x2 + x5) = (x1, x2^2, x2*x3, x2*x5, x3*x4, x4*x5, x3*x5^2)");
  EXPECT_FALSE(r.theorem.empty());
}

TEST(VerifyLemmas, AllPass) {
  Invocation r = invoke(opts("verify-lemmas"));
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace monreg::cli
