#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

/// Runs the CLI with a shell-quoted argument string; stderr is discarded.
Run mk_cli(const std::string& args) {
  std::string cmd = std::string(MK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, EvalTermAndFormula) {
  auto t = mk_cli("eval --env 'A=2' 'A ∪ [A]'");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "[[],[[]],[[],[[]]]]\n");
  EXPECT_EQ(mk_cli("eval '0 ∈ 2'").code, 0);
  auto f = mk_cli("eval 'exists x (x ∈ ∅)'");
  EXPECT_EQ(f.code, 1);
  EXPECT_EQ(f.out, "false\n");
  EXPECT_EQ(mk_cli("eval '{ x : ∈ }'").code, 2);
  EXPECT_EQ(mk_cli("eval 'B'").code, 2);
}

TEST(Cli, CheckPrintsWitnessWhenFalse) {
  auto ok = mk_cli(R"(check is_nest --args '{"n":[[],[[]],[[],[[]]]]}')");
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["result"].get<bool>());
  auto bad = mk_cli(R"(check is_nest --args '{"n":[[[]],[[[]]]]}')");
  EXPECT_EQ(bad.code, 1);
  auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["result"].get<bool>());
  EXPECT_FALSE(j["witness"].empty());
  EXPECT_EQ(mk_cli(R"(check extreme_member --args '{"F":1,"f":[]}')").code, 2);
  EXPECT_EQ(mk_cli("check no_such_predicate").code, 2);
}

TEST(Cli, Lemma) {
  EXPECT_EQ(mk_cli(R"(lemma LemmaZ3 --instance '{"X":3,"le":{"pairs":[[0,0],[0,1],[0,2],[1,1],[1,2],[2,2]]},"y":2}')").code,
            0);
  EXPECT_EQ(mk_cli("lemma LemmaT9 --instance '{}'").code, 2);
  EXPECT_EQ(mk_cli(R"(lemma LemmaT3 --instance '{"f":[[[]]]}')").code, 2);
}

TEST(Cli, DemoVerifiesPostconditions) {
  auto t = mk_cli(R"(demo tukey --input '{"f":[[],[[]],[[[]]],[[],[[]]]]}')");
  EXPECT_EQ(t.code, 0);
  auto j = nlohmann::json::parse(t.out);
  EXPECT_EQ(j["result_text"], "2");
  EXPECT_TRUE(j["verified"]["chi_fixed_point"].get<bool>());
  auto w = mk_cli(R"(demo ac-from-wo --input '{"X":3}' --choice seed:9)");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(nlohmann::json::parse(w.out)["verified"]["domain_size"], 7);
  EXPECT_EQ(mk_cli(R"(demo zermelo --input '{"A":[[]]}')").code, 2);
  EXPECT_EQ(mk_cli(R"(demo wellorder --input '{"X":4}')").code, 2);
  EXPECT_EQ(mk_cli(R"(demo wellorder --input '{"X":4,"fallback":true}')").code, 0);
}

TEST(Cli, SuiteReportsAreByteIdentical) {
  auto a = mk_cli("suite zorn --n 3 --no-timing --choice seed:2");
  auto b = mk_cli("suite zorn --n 3 --no-timing --choice seed:2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["instances"], 19);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_FALSE(j.contains("millis"));
  EXPECT_TRUE(nlohmann::json::parse(mk_cli("suite tukey --atoms 2").out).contains("millis"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(mk_cli("").code, 2);
  EXPECT_EQ(mk_cli("suite nosuch").code, 2);
  EXPECT_EQ(mk_cli("suite tukey --choice random").code, 2);
  EXPECT_EQ(mk_cli("enumerate posets --n 5").code, 2);
}

TEST(Cli, EnumerateCounts) {
  EXPECT_EQ(mk_cli("enumerate posets --n 3 --count").out, "19\n");
  EXPECT_EQ(mk_cli("enumerate downsets --n 3 --count").out, "20\n");
  EXPECT_EQ(mk_cli("enumerate totalorders --n 3 --count").out, "6\n");
}
