#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "cobweb/cli.hpp"

using cobweb::cli::run;

namespace {

cobweb::cli::CommandResult cli(std::vector<std::string> args) { return run(args); }

nlohmann::json parsed(const cobweb::cli::CommandResult& r) { return nlohmann::json::parse(r.out); }

struct Process {
  int exit_code = -1;
  std::string out;
};

Process spawn(const std::string& args) {
  const std::string cmd = std::string(COBWEB_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return p;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

}  // namespace

TEST(CliSeq, AdmissibleByDefault) {
  const auto r = cli({"seq", "check", "--spec", "fibonacci", "--upto", "10"});
  EXPECT_EQ(r.exit_code, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["admissible"]["verdict"], "admissible-up-to-10");
  EXPECT_TRUE(j["admissible"]["violation"].is_null());
  EXPECT_FALSE(j.contains("gcd_morphic"));
}

TEST(CliSeq, ViolationsExitOne) {
  const auto a = cli({"seq", "check", "--spec", "custom:2,3,5,7", "--upto", "3"});
  EXPECT_EQ(a.exit_code, 1);
  EXPECT_EQ(parsed(a)["admissible"]["violation"]["value"], "3/2");
  const auto g = cli({"seq", "check", "--spec", "bg:2", "--upto", "6", "--gcd-morphic"});
  EXPECT_EQ(g.exit_code, 1);
  const auto v = parsed(g)["gcd_morphic"]["violation"];
  EXPECT_EQ(v["n"], 3);
  EXPECT_EQ(v["m"], 2);
  EXPECT_EQ(v["gcd"], "2");
  EXPECT_EQ(v["expected"], "1");
  const auto both = cli({"seq", "check", "--spec", "fibonacci", "--upto", "12", "--admissible", "--gcd-morphic"});
  EXPECT_EQ(both.exit_code, 0);
  EXPECT_TRUE(parsed(both)["gcd_morphic"]["gcd_morphic"].get<bool>());
}

TEST(CliFnomial, ExactJson) {
  EXPECT_EQ(cli({"fnomial", "--spec", "fibonacci", "--n", "5", "--k", "2"}).out, "{\"value\":\"15\",\"integral\":true}\n");
  EXPECT_EQ(cli({"fnomial", "--spec", "custom:2,3,5,7", "--n", "2", "--k", "1"}).out,
            "{\"value\":\"3/2\",\"integral\":false}\n");
  EXPECT_EQ(cli({"fnomial", "--spec", "natural", "--n", "2"}).exit_code, 2);
  EXPECT_EQ(cli({"fnomial", "--spec", "natural", "--n", "2", "--k", "3"}).exit_code, 2);
}

TEST(CliFnomial, Triangle) {
  EXPECT_EQ(cli({"fnomial", "triangle", "--spec", "natural", "--rows", "4", "--format", "csv"}).out, "1\n1,1\n1,2,1\n1,3,3,1\n");
  EXPECT_EQ(cli({"fnomial", "triangle", "--spec", "natural", "--rows", "3", "--format", "json"}).out,
            "[[\"1\"],[\"1\",\"1\"],[\"1\",\"2\",\"1\"]]\n");
  EXPECT_EQ(cli({"fnomial", "triangle", "--spec", "natural", "--rows", "3", "--format", "xml"}).exit_code, 2);
}

TEST(CliPoset, BuildChainsPack) {
  EXPECT_EQ(cli({"poset", "build", "--spec", "fibonacci", "--levels", "4"}).out,
            "{\"spec\":\"fibonacci\",\"levels\":[1,1,1,2,3]}\n");
  for (const auto* mode : {"enumerate", "product", "matrix"}) {
    const auto r = cli({"poset", "chains", "--spec", "fibonacci", "--levels", "7", "--from-level", "0", "--to-level", "7",
                        "--mode", mode});
    EXPECT_EQ(parsed(r)["count"], "3120") << mode;
  }
  const auto tight = cli({"poset", "pack", "--spec", "natural", "--root-level", "2", "--m", "2"});
  EXPECT_EQ(tight.exit_code, 0);
  EXPECT_EQ(parsed(tight)["max_packing"], 6);
  const auto loose = cli({"poset", "pack", "--spec", "natural", "--root-level", "1", "--m", "2"});
  EXPECT_EQ(loose.exit_code, 1);
  EXPECT_EQ(parsed(loose)["max_packing"], 2);
  EXPECT_EQ(parsed(loose)["quotient_bound"], "3");
  EXPECT_EQ(cli({"poset", "pack", "--spec", "natural", "--root-level", "3", "--m", "3", "--cap", "10"}).exit_code, 2);
}

TEST(CliPoset, MatricesAndDot) {
  EXPECT_EQ(cli({"poset", "zeta", "--spec", "const:1", "--levels", "2", "--format", "csv"}).out, "1,1,1\n0,1,1\n0,0,1\n");
  EXPECT_EQ(cli({"poset", "mobius", "--spec", "const:1", "--levels", "2", "--format", "csv"}).out, "1,-1,0\n0,1,-1\n0,0,1\n");
  const auto z = parsed(cli({"poset", "zeta", "--spec", "const:1", "--levels", "1", "--format", "json"}));
  EXPECT_EQ(z["vertices"], nlohmann::json::parse(R"(["1,0","1,1"])"));
  const auto dot = cli({"poset", "dot", "--spec", "natural", "--levels", "2"}).out;
  EXPECT_EQ(dot.rfind("digraph cobweb {", 0), 0u);
  const auto dim2 = parsed(cli({"poset", "dim2", "--spec", "natural", "--levels", "2"}));
  EXPECT_TRUE(dim2["verified"].get<bool>());
  EXPECT_EQ(dim2["second"][2], "2,2");
}

TEST(CliPrefab, ComposeAndLaws) {
  const auto o = parsed(cli({"prefab", "compose", "--op", "odot", "--a", "1,3", "--b", "0,2", "--spec", "fibonacci"}));
  EXPECT_EQ(o["result"], "3,5");
  EXPECT_EQ(o["weight"], 2);
  EXPECT_EQ(o["copies"], "15");
  const auto c = parsed(cli({"prefab", "compose", "--op", "circ", "--a", "1,3", "--b", "i", "--spec", "natural"}));
  EXPECT_EQ(c["result"], "1,3");
  const auto laws = cli({"prefab", "laws", "--spec", "fibonacci", "--samples", "100", "--seed", "5"});
  EXPECT_EQ(laws.exit_code, 0);
  EXPECT_EQ(parsed(laws)["laws"].size(), 10u);
  EXPECT_EQ(cli({"prefab", "compose", "--op", "odot", "--a", "3,1", "--b", "i", "--spec", "natural"}).exit_code, 2);
}

TEST(CliSeries, Outputs) {
  EXPECT_EQ(cli({"series", "expf", "--spec", "fibonacci", "--order", "4"}).out,
            "[\"1/1\",\"1/1\",\"1/1\",\"1/2\",\"1/6\"]\n");
  EXPECT_EQ(parsed(cli({"series", "expf", "--spec", "natural"})).size(), 17u);
  const auto bell = parsed(cli({"series", "bell", "--spec", "fibonacci", "--n", "4", "--oracle"}));
  EXPECT_EQ(bell["value"], "41/4");
  EXPECT_TRUE(bell["match"].get<bool>());
  const auto q = parsed(cli({"series", "qbell", "--q", "2", "--n", "3", "--oracle"}));
  EXPECT_EQ(q["formula"], "57");
  EXPECT_EQ(q["stirling"], nlohmann::json::parse(R"(["1","28","28"])"));
  EXPECT_TRUE(q["match"].get<bool>());
  EXPECT_EQ(cli({"series", "qbell", "--q", "4", "--n", "3"}).exit_code, 2);
}

TEST(CliErrors, UsageAndDomainErrors) {
  EXPECT_EQ(cli({}).exit_code, 2);
  EXPECT_EQ(cli({"frobnicate"}).exit_code, 2);
  const auto bad = cli({"poset", "build", "--spec", "nonsense", "--levels", "2"});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(cli({"seq", "check", "--spec", "natural", "--upto", "x"}).exit_code, 2);
  const auto help = cli({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_NE(help.err.find("Usage"), std::string::npos);
}

TEST(CliBinary, ExitCodesAndStdout) {
  const auto ok = spawn("fnomial --spec fibonacci --n 5 --k 2");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out, "{\"value\":\"15\",\"integral\":true}\n");
  EXPECT_EQ(spawn("seq check --spec bg:2 --upto 6 --gcd-morphic").exit_code, 1);
  const auto usage = spawn("poset build --spec nonsense --levels 2");
  EXPECT_EQ(usage.exit_code, 2);
  EXPECT_TRUE(usage.out.empty());
  EXPECT_EQ(spawn("poset pack --spec natural --root-level 1 --m 2").exit_code, 1);
}
