#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gtest/gtest.h>

#include "sexa/cli.hpp"

namespace sexa::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) { return std::string(SEXA_SCRATCH_DIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, ParseAbsolute) {
  Result r = run_cli({"parse", "10,12;45"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "canonical: 10,12;45\nmantissa: 36765\nexponent: -1\n"
            "#RESULT parse absolute 10,12;45 36765 -1\n");
}

TEST(Cli, ParseNeedsModeWithoutSemicolon) {
  Result r = run_cli({"parse", "40,51"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--floating or --absolute"), std::string::npos);
  EXPECT_EQ(r.out, "");

  Result a = run_cli({"parse", "40,51", "--absolute"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("#RESULT parse absolute 40,51 2451 0\n"), std::string::npos);
  Result f = run_cli({"parse", "1,0", "--floating"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("#RESULT parse floating 1 1\n"), std::string::npos);
}

TEST(Cli, ParseFlagsAreExclusive) {
  Result r = run_cli({"parse", "1", "--floating", "--absolute"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, ParseRejectsBadDigit) {
  Result r = run_cli({"parse", "1,60;5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 2"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, RecipRegular) {
  Result r = run_cli({"recip", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "floating: 6\nanchored: 0;6\n#RESULT recip 6 0;6\n");
}

TEST(Cli, RecipIrregular) {
  Result r = run_cli({"recip", "40,51"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("817 = 19·43"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("3·19·43"), std::string::npos) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, RecipZero) { EXPECT_EQ(run_cli({"recip", "0"}).code, 1); }

TEST(Cli, Mul) {
  Result r = run_cli({"mul", "0;15", "40,51"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10,12;45\n#RESULT mul 10,12;45\n");
}

TEST(Cli, Solve) {
  Result r = run_cli({"solve", "40,51", "10,12;45"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0;15\n#RESULT solve 0;15\n");

  Result none = run_cli({"solve", "40,51", "1"});
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.err.find("817 = 19·43"), std::string::npos);
}

TEST(Cli, TableDouble) {
  Result r = run_cli({"table", "double", "--seed", "10", "--rows", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t10\t0;6\n2\t20\t0;3\n3\t40\t0;1,30\n");
  EXPECT_EQ(run_cli({"table", "double", "--seed", "7", "--rows", "3"}).code, 1);
  EXPECT_EQ(run_cli({"table", "double", "--seed", "10", "--rows", "0"}).code, 2);
  EXPECT_EQ(run_cli({"table", "double", "--seed", "10"}).code, 2);
  Result anchored = run_cli({"table", "double", "--seed", "10", "--rows", "1", "--anchor", "1"});
  EXPECT_EQ(anchored.out, "1\t10\t0;0,6\n");
}

TEST(Cli, TableStandard) {
  Result r = run_cli({"table", "standard", "--limit", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\t2\t0;30\n3\t3\t0;20\n4\t4\t0;15\n5\t5\t0;12\n6\t6\t0;10\n8\t8\t0;7,30\n");
  EXPECT_EQ(run_cli({"table", "standard", "--limit", "1"}).code, 2);
}

TEST(Cli, Verify) {
  Result good = run_cli({"verify", SEXA_GOLDEN_TABLE, "--mode", "doubling"});
  EXPECT_EQ(good.code, 0);
  EXPECT_NE(good.out.find("#RESULT verify ok 0\n"), std::string::npos);

  std::string bad = scratch("cli_bad.tsv");
  write_file(bad, "1\t10\t0;7\n");
  Result r = run_cli({"verify", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("row 1: PAIR_BAD"), std::string::npos);

  EXPECT_EQ(run_cli({"verify", scratch("does_not_exist.tsv")}).code, 3);
  EXPECT_EQ(run_cli({"verify", bad, "--mode", "other"}).code, 2);
}

TEST(Cli, OutputFile) {
  std::string path = scratch("cli_out.tsv");
  Result r = run_cli({"table", "double", "--seed", "10", "--rows", "2", "-o", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(path), "1\t10\t0;6\n2\t20\t0;3\n");
  EXPECT_EQ(run_cli({"mul", "2", "3", "--output", scratch("no/such/dir/x")}).code, 3);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"mul", "1"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"table", "standard", "--limit", "5000"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

// Black-box: the installed binary honours the same exit codes.
int exit_code_of(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(SEXA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::string out;
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  if (output) *output = out;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliBinary, ExitCodes) {
  std::string out;
  EXPECT_EQ(exit_code_of("solve 40,51 '10,12;45'", &out), 0);
  EXPECT_EQ(out, "0;15\n#RESULT solve 0;15\n");
  EXPECT_EQ(exit_code_of("recip 40,51"), 1);
  EXPECT_EQ(exit_code_of("parse 99"), 2);
  EXPECT_EQ(exit_code_of("verify /nonexistent/table.tsv"), 3);
}

}  // namespace
}  // namespace sexa::cli
