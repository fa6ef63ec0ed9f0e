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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "csr/axioms.h"
#include "csr/classify.h"
#include "csr/election_io.h"
#include "csr/error.h"
#include "csr/fixtures.h"
#include "csr/rule.h"
#include "csr/solve.h"
#include "csr/table_io.h"

namespace csr {

namespace {

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item = io_internal::Trim(item);
    if (item.empty()) {
      throw Error(ErrorKind::kInput, "empty item in list '" + text + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::kInput, "empty list");
  return out;
}

// Writes `text` to `path`, or to `out` when no path is given.
void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io_internal::WriteFile(path, text);
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct WinnersArgs {
  std::string rule;
  int k = 0;
  std::string election;
  std::string method = "exact";
  bool count_only = false;
  bool force = false;
  bool compare_exact = false;
};

struct ScoreArgs {
  std::string rule;
  int k = 0;
  std::string election;
  std::string committee;
};

struct ClassifyArgs {
  std::string table;
  std::string rule;
  int m = 0;
  int k = 0;
  std::string classes = "all";
};

struct AuditArgs {
  std::string axiom;
  std::string rule;
  int min_m = 2;
  int max_m = 0;
  int min_n = 1;
  int max_n = 0;
  std::optional<int> k;
  std::string mode = "exhaustive";
  int64_t samples = 1000;
  std::optional<uint64_t> seed;
  uint64_t budget = kDefaultBudget;
  std::string output;
};

struct GenArgs {
  std::string candidates;
  int m = 0;
  std::string center;
  std::string set;
  std::string w1;
  std::string w2;
  int64_t n = 0;
  std::optional<uint64_t> seed;
  std::string rule;
  int k = 0;
  std::string output;
};

int CmdWinners(const WinnersArgs& a, int threads, std::ostream& out) {
  const Election e = LoadElection(a.election);
  const Rule rule = ParseRule(a.rule, e.m(), a.k);
  const ScoringFunction f = rule.At(e.m(), a.k);
  auto print = [&](const WinnerSet& ws) {
    out << "optimum=" << ws.optimum.ToString() << "\n";
    if (a.count_only) {
      out << "count=" << ws.count << "\n";
      return;
    }
    for (const Committee& c : ws.committees) out << e.Format(c) << "\n";
  };
  if (a.method == "exact") {
    WinnerSet ws = WinnersExact(e, f, SolveOptions{threads});
    print(ws);
  } else if (a.method == "separable") {
    std::vector<Score> gamma;
    if (f.separable_gamma()) {
      gamma = *f.separable_gamma();
    } else {
      // Tables carry no witness; recover one when the table admits it.
      const Verdict v = ClassifyWeaklySeparable(f);
      if (!v.member() || v.approx) {
        throw Error(ErrorKind::kUnsupportedRule,
                    "rule '" + a.rule + "' is not weakly separable at m=" +
                        std::to_string(e.m()) + ", k=" + std::to_string(a.k));
      }
      gamma = v.gamma;
    }
    print(WinnersSeparable(e, gamma, a.k, a.count_only));
  } else {
    const GreedyResult g = WinnersGreedy(e, f, a.force);
    out << "score=" << g.score.ToString() << "\n";
    out << e.Format(g.committee) << "\n";
    if (!g.guaranteed) out << "guarantee=none\n";
    if (a.compare_exact) {
      const WinnerSet ws = WinnersExact(e, f, SolveOptions{threads});
      const double opt = ws.optimum.ToDouble();
      const double ratio = opt == 0 ? 1.0 : g.score.ToDouble() / opt;
      out << "optimum=" << ws.optimum.ToString() << "\n";
      out << "ratio=" << FormatDouble(ratio) << "\n";
    }
  }
  return kExitOk;
}

int CmdScore(const ScoreArgs& a, std::ostream& out) {
  const Election e = LoadElection(a.election);
  const Rule rule = ParseRule(a.rule, e.m(), a.k);
  const Committee w = e.MakeCommittee(SplitList(a.committee));
  if (w.size() != a.k) {
    throw Error(ErrorKind::kInput, "committee has " +
                                       std::to_string(w.size()) +
                                       " members but k=" + std::to_string(a.k));
  }
  out << ScoreOf(e, rule.At(e.m(), a.k), w).ToString() << "\n";
  return kExitOk;
}

int CmdClassify(const ClassifyArgs& a, std::ostream& out) {
  std::vector<StructuralClass> classes;
  if (a.classes == "all") {
    classes = AllClasses();
  } else {
    for (const std::string& name : SplitList(a.classes)) {
      classes.push_back(ParseClassName(name));
    }
  }
  if (!a.table.empty() == !a.rule.empty()) {
    throw Error(ErrorKind::kInput, "pass exactly one of --table or --rule");
  }
  if (!a.table.empty()) {
    out << Classify(LoadTable(a.table), nullptr, classes).Format();
    return kExitOk;
  }
  const Rule rule = ParseRule(a.rule, a.m, a.k);
  out << Classify(rule.At(a.m, a.k), &rule, classes).Format();
  return kExitOk;
}

int CmdAudit(const AuditArgs& a, int threads, std::ostream& out) {
  SearchDomain d;
  d.min_m = a.min_m;
  d.max_m = a.max_m;
  d.min_n = a.min_n;
  d.max_n = a.max_n;
  d.k = a.k;
  d.budget = a.budget;
  d.threads = threads;
  if (a.mode == "random") {
    if (!a.seed) {
      throw Error(ErrorKind::kInput, "random mode needs an explicit --seed");
    }
    d.mode = SearchMode::kRandom;
    d.samples = a.samples;
    d.seed = *a.seed;
  }
  const AuditOutcome outcome =
      Audit(ParseRule(a.rule), ParseAxiom(a.axiom), d);
  Emit(FormatAuditReport(outcome), a.output, out);
  switch (outcome.verdict) {
    case AuditVerdict::kVerified:
      return kExitOk;
    case AuditVerdict::kCounterexample:
      return kExitCounterexample;
    case AuditVerdict::kPartial:
      return kExitPartial;
  }
  return kExitOk;
}

std::vector<std::string> GenRoster(const GenArgs& a) {
  if (!a.candidates.empty()) return SplitList(a.candidates);
  if (a.m < 1) throw Error(ErrorKind::kInput, "pass --candidates or -m");
  return DefaultRoster(a.m);
}

int CmdGen(const std::string& kind, const GenArgs& a, std::ostream& out) {
  if (kind == "table") {
    const Rule rule = ParseRule(a.rule, a.m, a.k);
    Emit(FormatTable(rule.At(a.m, a.k)), a.output, out);
    return kExitOk;
  }
  const std::vector<std::string> roster = GenRoster(a);
  std::optional<Election> e;
  if (kind == "zeta") {
    e = ZetaCandidate(roster, a.center);
  } else if (kind == "zeta-set") {
    e = ZetaSet(roster, SplitList(a.set));
  } else if (kind == "perms") {
    e = AllPermutations(roster);
  } else if (kind == "two-winner") {
    e = TwoWinnerElection(roster, SplitList(a.w1), SplitList(a.w2));
  } else {
    if (!a.seed) throw Error(ErrorKind::kInput, "ic needs an explicit --seed");
    e = ImpartialCulture(roster, a.n, *a.seed);
  }
  Emit(FormatElection(*e), a.output, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Committee scoring rules: winners, scores, classification, "
               "axiom audits and fixture generation.",
               "csr"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (0 = all cores); output does not depend "
                 "on it")
      ->check(CLI::NonNegativeNumber);

  WinnersArgs wa;
  CLI::App* winners = app.add_subcommand("winners", "Winning committees");
  winners->add_option("--rule", wa.rule, "Rule spec")->required();
  winners->add_option("-k", wa.k, "Committee size")->required();
  winners->add_option("--election", wa.election, ".elec file")->required();
  winners->add_option("--method", wa.method, "exact, separable or greedy")
      ->check(CLI::IsMember({"exact", "separable", "greedy"}));
  winners->add_flag("--count-only", wa.count_only,
                    "Print the optimum and the number of winners");
  winners->add_flag("--force", wa.force,
                    "Run greedy on rules without its guarantee");
  winners->add_flag("--compare-exact", wa.compare_exact,
                    "Greedy: also print the exact optimum and the ratio");

  ScoreArgs sa;
  CLI::App* score = app.add_subcommand("score", "Score of one committee");
  score->add_option("--rule", sa.rule, "Rule spec")->required();
  score->add_option("-k", sa.k, "Committee size")->required();
  score->add_option("--election", sa.election, ".elec file")->required();
  score->add_option("--committee", sa.committee, "Members, e.g. a,b")
      ->required();

  ClassifyArgs ca;
  CLI::App* classify =
      app.add_subcommand("classify", "Structural classes of a table");
  classify->add_option("--table", ca.table, ".fmk file");
  classify->add_option("--rule", ca.rule, "Rule spec (with -m, -k)");
  classify->add_option("-m", ca.m, "Candidates (with --rule)");
  classify->add_option("-k", ca.k, "Committee size (with --rule)");
  classify->add_option("--class", ca.classes,
                       "all or a comma list of: separable, weakly-separable, "
                       "rep-focused, top-k, owa, decomposable");

  AuditArgs aa;
  CLI::App* audit = app.add_subcommand("audit", "Search for axiom violations");
  audit->add_option("--axiom", aa.axiom,
                    "non-crossing, prefix:<t>, top-member, narrow-top, "
                    "enlargement, candidate, consistency or nonimposition")
      ->required();
  audit->add_option("--rule", aa.rule, "Rule spec")->required();
  audit->add_option("--min-m", aa.min_m, "Smallest candidate count");
  audit->add_option("--max-m", aa.max_m, "Largest candidate count")
      ->required();
  audit->add_option("--min-n", aa.min_n, "Smallest voter count");
  audit->add_option("--max-n", aa.max_n, "Largest voter count");
  audit->add_option("-k", aa.k, "Fixed committee size");
  audit->add_option("--mode", aa.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  audit->add_option("--samples", aa.samples, "Random profiles (or pairs)");
  audit->add_option("--seed", aa.seed, "Random mode seed");
  audit->add_option("--budget", aa.budget, "Committee-score evaluations");
  audit->add_option("-o,--output", aa.output, "Report file");

  GenArgs ga;
  std::string gen_kind;
  CLI::App* gen = app.add_subcommand("gen", "Generate elections or tables");
  gen->add_option("kind", gen_kind,
                  "zeta, zeta-set, perms, two-winner, ic or table")
      ->required()
      ->check(CLI::IsMember(
          {"zeta", "zeta-set", "perms", "two-winner", "ic", "table"}));
  gen->add_option("--candidates", ga.candidates, "Roster, e.g. a,b,c");
  gen->add_option("-m", ga.m, "Default roster size a, b, ...");
  gen->add_option("--center", ga.center, "zeta: the favoured candidate");
  gen->add_option("--set", ga.set, "zeta-set: members");
  gen->add_option("--w1", ga.w1, "two-winner: first committee");
  gen->add_option("--w2", ga.w2, "two-winner: second committee");
  gen->add_option("-n", ga.n, "ic: voters");
  gen->add_option("--seed", ga.seed, "ic: seed");
  gen->add_option("--rule", ga.rule, "table: rule spec");
  gen->add_option("-k", ga.k, "table: committee size");
  gen->add_option("-o,--output", ga.output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const std::vector<CLI::App*> chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.back()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (winners->parsed()) return CmdWinners(wa, threads, out);
    if (score->parsed()) return CmdScore(sa, out);
    if (classify->parsed()) return CmdClassify(ca, out);
    if (audit->parsed()) {
      if (aa.max_n < 1 && aa.axiom != "nonimposition") {
        throw Error(ErrorKind::kInput, "--max-n is required");
      }
      if (aa.max_n < aa.min_n) aa.max_n = aa.min_n;
      return CmdAudit(aa, threads, out);
    }
    return CmdGen(gen_kind, ga, out);
  } catch (const Error& e) {
    err << "error: " << ErrorKindName(e.kind()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace csr
