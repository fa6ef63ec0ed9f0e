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

#include "csr/rule.h"

#include <memory>
#include <sstream>

#include "csr/election_io.h"
#include "csr/error.h"
#include "csr/table_io.h"

namespace csr {

namespace {

using io_internal::Trim;

[[noreturn]] void Fail(std::string_view spec, const std::string& why) {
  throw Error(ErrorKind::kParse,
              "bad rule spec '" + std::string(spec) + "': " + why);
}

std::vector<std::string> SplitList(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, sep);) {
    out.push_back(Trim(item));
  }
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int ParseInt(std::string_view spec, const std::string& text) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    Fail(spec, "expected a positive integer, got '" + text + "'");
  }
  return std::stoi(text);
}

Score ParseNumber(std::string_view spec, const std::string& text) {
  try {
    return Score::Parse(text);
  } catch (const Error&) {
    Fail(spec, "expected a number, got '" + text + "'");
  }
}

// Wraps a family constructor: (m, k) range errors stay input errors, while
// parameters that do not fit (m, k) become parse errors.
Rule MakeRule(std::string spec, Rule::Factory build) {
  auto factory = [spec, build = std::move(build)](int m, int k) {
    if (k < 1 || k > m) {
      throw Error(ErrorKind::kInput, "rule '" + spec + "' needs 1 <= k <= m");
    }
    try {
      return build(m, k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInput) throw;
      throw Error(ErrorKind::kParse, "rule '" + spec + "' at m=" +
                                         std::to_string(m) + ", k=" +
                                         std::to_string(k) + ": " + e.what());
    }
  };
  return Rule(std::move(spec), std::move(factory));
}

}  // namespace

Rule ParseRule(std::string_view raw) {
  const std::string spec = Trim(raw);
  const size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : Trim(spec.substr(colon + 1));
  const bool has_arg = colon != std::string::npos;
  auto no_arg = [&](Rule::Factory build) {
    if (has_arg) Fail(spec, "family '" + head + "' takes no parameters");
    return MakeRule(spec, std::move(build));
  };

  if (head == "sntv") return no_arg(families::Sntv);
  if (head == "bloc") return no_arg(families::Bloc);
  if (head == "kborda") return no_arg(families::KBorda);
  if (head == "cc-borda") return no_arg(families::CcBorda);
  if (head == "cc-approval") return no_arg(families::CcApproval);
  if (head == "perfectionist") return no_arg(families::Perfectionist);
  if (head == "sntv+perf") return no_arg(families::SntvPerf);
  if (head == "trivial") return no_arg(families::Trivial);

  if (!has_arg || arg.empty()) Fail(spec, "missing parameters");

  if (head == "pav") {
    if (arg == "<k>" || arg == "k") {
      return MakeRule(spec, [](int m, int k) {
        return families::Pav(m, k, k);
      });
    }
    int t = ParseInt(spec, arg);
    if (t < 1) Fail(spec, "t must be at least 1");
    return MakeRule(spec, [t](int m, int k) {
      return families::Pav(m, k, t);
    });
  }
  if (head == "qhb") {
    Score q = ParseNumber(spec, arg);
    if (q.IsNegative()) Fail(spec, "q must be nonnegative");
    return MakeRule(spec, [q](int m, int k) {
      return families::Qhb(m, k, q);
    });
  }
  if (head == "lpborda") {
    Score p = ParseNumber(spec, arg);
    if (p < Score(1)) Fail(spec, "p must be at least 1");
    return MakeRule(spec, [p](int m, int k) {
      return families::LpBorda(m, k, p);
    });
  }
  if (head == "multithreshold") {
    std::vector<std::string> halves = SplitList(arg, ';');
    if (halves.size() != 2) Fail(spec, "expected '<weights>;<thresholds>'");
    std::vector<Score> lambdas;
    for (const std::string& s : SplitList(halves[0], ',')) {
      Score l = ParseNumber(spec, s);
      if (l.IsNegative()) Fail(spec, "weights must be nonnegative");
      lambdas.push_back(l);
    }
    std::vector<int> thresholds;
    for (const std::string& s : SplitList(halves[1], ',')) {
      thresholds.push_back(ParseInt(spec, s));
    }
    if (lambdas.size() != thresholds.size()) {
      Fail(spec, "weights and thresholds differ in length");
    }
    return MakeRule(spec, [lambdas, thresholds](int m, int k) {
      return families::MultiThreshold(m, k, lambdas, thresholds);
    });
  }
  if (head == "maxthreshold") {
    std::vector<int> thresholds;
    for (const std::string& s : SplitList(arg, ',')) {
      thresholds.push_back(ParseInt(spec, s));
    }
    return MakeRule(spec, [thresholds](int m, int k) {
      return families::MaxThreshold(m, k, thresholds);
    });
  }
  if (head == "table") {
    auto table = std::make_shared<ScoringFunction>(LoadTable(arg));
    return MakeRule(spec, [table](int m, int k) {
      if (m != table->m() || k != table->k()) {
        throw Error(ErrorKind::kInput,
                    "table is defined only at m=" + std::to_string(table->m()) +
                        ", k=" + std::to_string(table->k()));
      }
      return *table;
    });
  }
  Fail(spec, "unknown family '" + head + "'");
}

Rule ParseRule(std::string_view spec, int m, int k) {
  Rule rule = ParseRule(spec);
  rule.At(m, k);
  return rule;
}

std::vector<std::string> CatalogSpecs() {
  return {"sntv",      "bloc",    "kborda",        "cc-borda",
          "cc-approval", "pav:2", "pav:<k>",       "qhb:1",
          "lpborda:2", "perfectionist", "sntv+perf", "trivial"};
}

}  // namespace csr
