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

#include "csr/table_io.h"

#include <optional>
#include <sstream>
#include <vector>

#include "csr/election_io.h"
#include "csr/error.h"

namespace csr {

namespace {

using io_internal::Trim;

[[noreturn]] void Fail(int line_no, const std::string& message) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + message);
}

int ParseHeaderInt(int line_no, const std::string& text) {
  if (text.empty() || text.size() > 4 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    Fail(line_no, "expected a positive integer, got '" + text + "'");
  }
  return std::stoi(text);
}

}  // namespace

ScoringFunction ParseTable(std::string_view text, bool validate,
                           std::string name) {
  std::istringstream in{std::string(text)};
  int m = 0;
  int k = 0;
  std::vector<std::optional<Score>> values;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = Trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) Fail(line_no, "expected ':'");
    std::string head = Trim(line.substr(0, colon));
    std::string body = Trim(line.substr(colon + 1));
    if (head == "m" || head == "k") {
      if (!values.empty()) Fail(line_no, "header after rows");
      (head == "m" ? m : k) = ParseHeaderInt(line_no, body);
      if (m > 0 && k > 0) {
        if (k > m) Fail(line_no, "k exceeds m");
        if (Binomial(m, k) > 5'000'000) Fail(line_no, "table too large");
        values.assign(Binomial(m, k), std::nullopt);
      }
      continue;
    }
    if (values.empty()) Fail(line_no, "rows must follow 'm:' and 'k:'");
    std::vector<int> positions;
    std::istringstream row(head);
    for (std::string w; row >> w;) {
      positions.push_back(ParseHeaderInt(line_no, w));
    }
    std::optional<CommitteePosition> p;
    try {
      p.emplace(m, positions);
    } catch (const Error& e) {
      Fail(line_no, e.what());
    }
    if (p->k() != k) Fail(line_no, "row has the wrong length");
    uint64_t rank = p->Rank();
    if (values[rank]) Fail(line_no, "duplicate row " + p->ToString());
    try {
      values[rank] = Score::Parse(body);
    } catch (const Error& e) {
      Fail(line_no, e.what());
    }
  }
  if (values.empty()) throw Error(ErrorKind::kParse, "missing 'm:'/'k:'");
  std::vector<Score> out;
  out.reserve(values.size());
  for (uint64_t r = 0; r < values.size(); ++r) {
    if (!values[r]) {
      throw Error(ErrorKind::kParse,
                  "missing row " +
                      CommitteePosition(m, PositionAtRank(m, k, r)).ToString());
    }
    out.push_back(*values[r]);
  }
  if (validate) return MakeTable(m, k, std::move(out), std::move(name));
  return MakeTableUnchecked(m, k, std::move(out), std::move(name));
}

ScoringFunction LoadTable(const std::string& path, bool validate) {
  return ParseTable(io_internal::ReadFile(path), validate, "table:" + path);
}

std::string FormatTable(const ScoringFunction& f) {
  std::string out = "m: " + std::to_string(f.m()) + "\nk: " +
                    std::to_string(f.k()) + "\n";
  for (uint64_t r = 0; r < f.size(); ++r) {
    std::vector<int> p = PositionAtRank(f.m(), f.k(), r);
    for (size_t t = 0; t < p.size(); ++t) {
      out += (t ? " " : "") + std::to_string(p[t]);
    }
    out += " : " + f.ValueAtRank(r).ToStringFull() + "\n";
  }
  return out;
}

void SaveTable(const ScoringFunction& f, const std::string& path) {
  io_internal::WriteFile(path, FormatTable(f));
}

}  // namespace csr
