// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csr/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csr/election_io.h"
#include "test_util.h"

namespace csr {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testing::TempDir("cli"); }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string Read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, WinnersExact) {
  const std::string tiny =
      Write("tiny.elec", "candidates: a b c\n2: a > b > c\n1: b > a > c\n");
  const Invocation r =
      Invoke({"winners", "--rule", "sntv", "-k", "1", "--election", tiny});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "optimum=2\n{a}\n");
  const Invocation c = Invoke({"winners", "--rule", "kborda", "-k", "2",
                        "--election", tiny, "--count-only"});
  EXPECT_EQ(c.out, "optimum=9\ncount=1\n");
}

TEST_F(CliTest, WinnersSeparableAndGreedy) {
  const std::string e = Write(
      "e.elec", "candidates: a b c d\n1: a > b > c > d\n1: d > c > a > b\n");
  const Invocation sep = Invoke({"winners", "--rule", "cc-borda", "-k", "2",
                          "--election", e, "--method", "separable"});
  EXPECT_EQ(sep.code, kExitInputError);
  EXPECT_NE(sep.err.find("unsupported"), std::string::npos) << sep.err;
  const Invocation ok = Invoke({"winners", "--rule", "bloc", "-k", "2", "--election",
                         e, "--method", "separable"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  const Invocation greedy =
      Invoke({"winners", "--rule", "pav:2", "-k", "2", "--election", e,
              "--method", "greedy", "--compare-exact"});
  EXPECT_EQ(greedy.code, kExitOk) << greedy.err;
  EXPECT_EQ(greedy.out.rfind("score=", 0), 0u);
  EXPECT_NE(greedy.out.find("\nratio="), std::string::npos);
}

TEST_F(CliTest, Score) {
  const std::string v = Write("v.elec", "candidates: a b c d\n1: a > b > c > d\n");
  auto score = [&](const std::string& rule) {
    return Invoke({"score", "--rule", rule, "-k", "2", "--election", v,
                   "--committee", "a,b"});
  };
  EXPECT_EQ(score("kborda").out, "5\n");
  EXPECT_EQ(score("pav:2").out, "3/2\n");
  EXPECT_EQ(score("lpborda:2").out, "3.605551275464\n");
  const Invocation bad = Invoke({"score", "--rule", "kborda", "-k", "2", "--election",
                          v, "--committee", "a"});
  EXPECT_EQ(bad.code, kExitInputError);
}

TEST_F(CliTest, AuditExitCodes) {
  const Invocation nc = Invoke({"audit", "--axiom", "non-crossing", "--rule", "bloc",
                         "--max-m", "4", "--max-n", "3"});
  EXPECT_EQ(nc.code, kExitOk) << nc.err;
  EXPECT_EQ(nc.out.rfind("axiom=non-crossing rule=bloc verdict=verified", 0),
            0u);
  const Invocation en = Invoke({"audit", "--axiom", "enlargement", "--rule", "bloc",
                         "--max-m", "4", "--max-n", "3"});
  EXPECT_EQ(en.code, kExitCounterexample) << en.err;
  const size_t block = en.out.find("candidates:");
  ASSERT_NE(block, std::string::npos);
  EXPECT_NO_THROW(ParseElection(en.out.substr(block)));
  const Invocation ni = Invoke({"audit", "--axiom", "nonimposition", "--rule",
                         "trivial", "--max-m", "3", "-k", "2"});
  EXPECT_EQ(ni.code, kExitCounterexample) << ni.err;
  const Invocation partial =
      Invoke({"audit", "--axiom", "non-crossing", "--rule", "sntv", "--max-m",
              "4", "--max-n", "3", "--budget", "10"});
  EXPECT_EQ(partial.code, kExitPartial);
}

TEST_F(CliTest, AuditFlagErrors) {
  EXPECT_EQ(Invoke({"audit", "--axiom", "non-crossing", "--rule", "bloc",
                    "--max-m", "4"})
                .code,
            kExitInputError);
  EXPECT_EQ(Invoke({"audit", "--axiom", "non-crossing", "--rule", "bloc",
                    "--max-m", "4", "--max-n", "2", "--mode", "random"})
                .code,
            kExitInputError);
  EXPECT_EQ(Invoke({"audit", "--axiom", "sideways", "--rule", "bloc",
                    "--max-m", "4", "--max-n", "2"})
                .code,
            kExitInputError);
  EXPECT_EQ(Invoke({"audit", "--bogus"}).code, kExitInputError);
  EXPECT_EQ(Invoke({}).code, kExitInputError);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, Classify) {
  const Invocation bloc =
      Invoke({"classify", "--rule", "bloc", "-m", "4", "-k", "2"});
  EXPECT_EQ(bloc.code, kExitOk) << bloc.err;
  EXPECT_NE(bloc.out.find("weakly-separable=member"), std::string::npos);
  EXPECT_NE(bloc.out.find("rep-focused=non_member"), std::string::npos);
  ASSERT_EQ(Invoke({"gen", "table", "--rule", "multithreshold:1,1;4,2", "-m",
                    "8", "-k", "2", "-o", Path("mt.fmk")})
                .code,
            kExitOk);
  const Invocation mt = Invoke({"classify", "--table", Path("mt.fmk")});
  EXPECT_NE(mt.out.find("decomposable=member"), std::string::npos) << mt.out;
  EXPECT_NE(mt.out.find("owa=non_member"), std::string::npos);
  const std::string flat =
      Write("flat.fmk", "m: 3\nk: 1\n1 : 2\n2 : 2\n3 : 2\n");
  const Invocation c = Invoke({"classify", "--table", flat});
  EXPECT_NE(c.out.find("degenerate=true"), std::string::npos);
  EXPECT_EQ(c.out.find("non_member"), std::string::npos);
  const std::string bad = Write("bad.fmk", "m: 3\nk: 1\n1 : 2\n");
  EXPECT_EQ(Invoke({"classify", "--table", bad}).code, kExitInputError);
}

TEST_F(CliTest, Gen) {
  const Invocation z = Invoke({"gen", "zeta", "--candidates", "a,b,c", "--center", "a"});
  EXPECT_EQ(z.code, kExitOk) << z.err;
  EXPECT_EQ(ParseElection(z.out).n(), 2);
  ASSERT_EQ(Invoke({"gen", "table", "--rule", "bloc", "-m", "4", "-k", "2",
                    "-o", Path("bloc.fmk")})
                .code,
            kExitOk);
  const std::string table = Read("bloc.fmk");
  int rows = 0;
  std::istringstream lines(table);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(':') != std::string::npos && line[0] >= '1' &&
        line[0] <= '9') {
      ++rows;
    }
  }
  EXPECT_EQ(rows, 6);
  const std::vector<std::string> ic = {"gen", "ic", "--candidates", "a,b,c,d",
                                       "-n", "5", "--seed", "7"};
  const Invocation first = Invoke(ic);
  EXPECT_EQ(first.code, kExitOk);
  EXPECT_EQ(Invoke(ic).out, first.out);
  EXPECT_EQ(ParseElection(first.out).n(), 5);
  EXPECT_EQ(Invoke({"gen", "ic", "--candidates", "a,b", "-n", "5"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"gen", "zeta", "--candidates", "a,b", "--center", "q"})
                .code,
            kExitInputError);
}

TEST_F(CliTest, ThreadsFlagDoesNotChangeOutput) {
  const std::vector<std::string> base = {"audit", "--axiom", "non-crossing",
                                         "--rule", "pav:2", "--max-m", "4",
                                         "--max-n", "3"};
  std::vector<std::string> serial = base;
  serial.insert(serial.begin(), {"--threads", "1"});
  EXPECT_EQ(Invoke(serial).out, Invoke(base).out);
}

}  // namespace
}  // namespace csr
