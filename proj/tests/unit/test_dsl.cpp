#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Output {
  int code;
  std::string out;
};

Output run_cli(const std::string& args) {
  const std::string cmd = std::string(RINGLAB_CLI) + " " + args + " 2>/dev/null";
  Output o{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::vector<fs::path> scripts() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(RINGLAB_SOURCE_DIR) / "scripts"))
    if (e.path().extension() == ".ring") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<nlohmann::json> run_text(const std::string& text, dsl::Options opt = {false, false}) {
  dsl::Executor ex(opt);
  return ex.run(dsl::parse(text));
}

void expect_parse_error(const std::string& text, int line, int column) {
  try {
    dsl::parse(text);
    FAIL() << "accepted: " << text;
  } catch (const dsl::parse_error& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    if (column) {
      EXPECT_EQ(e.column(), column) << e.what();
    }
  }
}

}  // namespace

TEST(Dsl, SyntaxErrorsCarryPosition) {
  expect_parse_error("ring = zmod 4", 1, 6);
  expect_parse_error("ring A = zmod 4\nring B = zmod", 2, 14);
  expect_parse_error("ring A = zmod 4\nmset S in A = closure {1,}", 2, 26);
  expect_parse_error("ring A = frob 4", 1, 1);
  expect_parse_error("ring A = zmod 4 $", 1, 17);
}

TEST(Dsl, NameErrors) {
  expect_parse_error("check bezout A", 1, 0);
  expect_parse_error("ring A = zmod 4\nring A = zmod 5", 2, 0);
  expect_parse_error("ring A = zmod 4\ncheck sbezout A", 2, 0);
  expect_parse_error("ring A = zmod 4\ncheck frobnicate A", 2, 7);
  expect_parse_error("ring A = zmod 4\nideal I in A = <2>\nmset S in A = closure {1}\ncheck sfinite I S", 4, 0);
}

TEST(Dsl, CommentsAndBlankLines) {
  const auto p = dsl::parse("# header\n\nring A = zmod 4   # trailing\n");
  ASSERT_EQ(p.statements.size(), 1u);
  EXPECT_EQ(p.statements[0].line, 3);
}

TEST(Dsl, ScriptsRoundTrip) {
  const auto all = scripts();
  ASSERT_GE(all.size(), 5u);
  for (const auto& s : all) {
    const auto prog = dsl::parse(read_file(s));
    const auto printed = dsl::print(prog);
    EXPECT_EQ(dsl::parse(printed), prog) << s;
    EXPECT_EQ(dsl::print(dsl::parse(printed)), printed) << s;
  }
}

TEST(Dsl, BadStatementDoesNotStopTheRest) {
  const auto recs = run_text(
      "ring A = zmod 6\nring B = zmod 4\nmset S in A = closure {5}\n"
      "check bezout A\ncheck sbezout B S\ncheck bezout B\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["result"], true);
  EXPECT_TRUE(recs[1].contains("error"));
  EXPECT_EQ(recs[1]["line"], 5);
  EXPECT_EQ(recs[2]["result"], true);
}

TEST(Dsl, FailedDefinitionPoisonsDependents) {
  const auto recs = run_text("ring A = zmod 6\nmset S in A = closure {2, 3}\nring L = localize(A, S)\ncheck bezout L\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_TRUE(recs[0].contains("error"));
  EXPECT_TRUE(recs[1].contains("error"));
}

TEST(Dsl, BadElementLiteral) {
  const auto recs = run_text("ring A = zmod 6\nideal I in A = <(1,2)>\n");
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_NE(recs[0]["error"].get<std::string>().find("(1,2)"), std::string::npos);
}

TEST(Dsl, RecordShape) {
  const auto recs = run_text("ring A = zmod 12\nmset S in A = closure {2}\nideal I in A = <4, 6>\ncheck sprincipal I S\n");
  ASSERT_EQ(recs.size(), 1u);
  const auto& r = recs[0];
  EXPECT_EQ(r["query"], "sprincipal");
  EXPECT_EQ(r["args"], nlohmann::json({"I", "S"}));
  EXPECT_EQ(r["result"], true);
  EXPECT_EQ(r["witness"]["a"], "2");
  EXPECT_FALSE(r.contains("elapsed_ms"));
  const auto timed = run_text("ring A = zmod 12\ncheck bezout A\n", {true, false});
  EXPECT_TRUE(timed[0].contains("elapsed_ms"));
  const auto verbose = run_text("ring A = zmod 12\ncheck bezout A\n", {false, true});
  ASSERT_EQ(verbose.size(), 2u);
  EXPECT_EQ(verbose[0]["order"], 12);
}

TEST(Dsl, ZextQueries) {
  const auto recs = run_text(
      "ring F = zmod 2\nmodule M over F = free 2\nring R = zext M\nmset U in R = closure {}\n"
      "mset S in R = closure {(2,[0,0])}\nideal K in R = <(0,[1,0]), (0,[0,1])>\n"
      "check sprincipal K U\ncheck sprincipal K S\ncheck bezout R\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["result"], false);
  EXPECT_TRUE(recs[0].contains("exhaustion"));
  EXPECT_EQ(recs[1]["witness"]["s"], "(2,[0,0])");
  EXPECT_TRUE(recs[2].contains("error"));
}

TEST(Dsl, HomConstructors) {
  const auto recs = run_text(
      "ring A = zmod 4\nring B = zmod 2\nring P = product(A, B)\nhom p: P -> A = proj1\nhom q: P -> B = proj2\n"
      "hom d: A -> P = inclusion\nhom bad: A -> B = map [0, 1, 1, 0]\nring C = zmod 4\nhom e: A -> C = id\n");
  ASSERT_EQ(recs.size(), 3u);
  for (const auto& r : recs) EXPECT_TRUE(r.contains("error"));
}

TEST(Cli, RunExitCodes) {
  const auto dir = fs::path(RINGLAB_SOURCE_DIR) / "scripts";
  EXPECT_EQ(run_cli("run " + (dir / "product.ring").string() + " --no-timing").code, 0);
  EXPECT_EQ(run_cli("run " + (dir / "errors.ring").string() + " --no-timing").code, 1);
  EXPECT_EQ(run_cli("run /nonexistent.ring").code, 1);
  EXPECT_EQ(run_cli("frobnicate").code, 64);
  EXPECT_EQ(run_cli("suite --profile huge").code, 64);
  EXPECT_EQ(run_cli("search P99").code, 64);
  EXPECT_EQ(run_cli("").code, 64);
}

TEST(Cli, SyntaxErrorExitCode) {
  const auto path = fs::temp_directory_path() / "ringlab_bad.ring";
  std::ofstream(path) << "ring = zmod 4\n";
  const auto o = run_cli("run " + path.string());
  EXPECT_EQ(o.code, 1);
  const auto rec = nlohmann::json::parse(o.out);
  EXPECT_EQ(rec["line"], 1);
  EXPECT_EQ(rec["column"], 6);
}

TEST(Cli, SearchProbeIsNotAFailure) {
  const auto o = run_cli("search C12 --budget 200 --no-timing");
  EXPECT_EQ(o.code, 0);
  EXPECT_GT(nlohmann::json::parse(o.out)["violation_count"].get<int>(), 0);
}

TEST(Cli, Ideals) {
  const auto o = run_cli("ideals " + (fs::path(RINGLAB_SOURCE_DIR) / "scripts" / "product.ring").string() + " --ring R");
  EXPECT_EQ(o.code, 0);
  std::size_t n = 0;
  std::istringstream in(o.out);
  for (std::string line; std::getline(in, line);) n += nlohmann::json::parse(line).contains("generators");
  EXPECT_EQ(n, 18u);
}

TEST(Cli, GoldenOutputs) {
  for (const auto& s : scripts()) {
    const auto golden = fs::path(RINGLAB_SOURCE_DIR) / "tests" / "golden" / (s.stem().string() + ".jsonl");
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(run_cli("run " + s.string() + " --no-timing").out, read_file(golden)) << s;
  }
}
