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

#include "csr/election_io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "csr/error.h"

namespace csr {

namespace io_internal {

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace io_internal

namespace {

using io_internal::Trim;

std::string StripComment(const std::string& line) {
  return Trim(line.substr(0, line.find('#')));
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void Fail(int line_no, const std::string& message) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Election ParseElection(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> roster;
  bool have_roster = false;
  std::vector<Vote> votes;
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = StripComment(raw);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) Fail(line_no, "expected ':'");
    std::string head = Trim(line.substr(0, colon));
    std::string body = Trim(line.substr(colon + 1));
    if (!have_roster) {
      if (head != "candidates") Fail(line_no, "expected 'candidates:' line");
      roster = SplitWhitespace(body);
      if (roster.empty()) Fail(line_no, "empty candidate list");
      for (const std::string& c : roster) {
        if (!IsValidToken(c)) Fail(line_no, "invalid candidate '" + c + "'");
      }
      have_roster = true;
      continue;
    }
    if (head.empty() ||
        head.find_first_not_of("0123456789") != std::string::npos ||
        head.size() > 18) {
      Fail(line_no, "malformed vote weight '" + head + "'");
    }
    int64_t weight = std::stoll(head);
    if (weight < 1) Fail(line_no, "vote weight must be at least 1");
    std::vector<int> ranking;
    std::string token;
    std::istringstream parts(body);
    while (std::getline(parts, token, '>')) {
      token = Trim(token);
      int index = -1;
      for (size_t i = 0; i < roster.size(); ++i) {
        if (roster[i] == token) index = static_cast<int>(i);
      }
      if (index < 0) Fail(line_no, "unknown candidate '" + token + "'");
      ranking.push_back(index);
    }
    if (!body.empty() && body.back() == '>') Fail(line_no, "dangling '>'");
    if (ranking.size() != roster.size()) {
      Fail(line_no, "ranking must list every candidate exactly once");
    }
    try {
      votes.emplace_back(std::move(ranking), weight);
    } catch (const Error& e) {
      Fail(line_no, e.what());
    }
  }
  if (!have_roster) throw Error(ErrorKind::kParse, "missing candidates line");
  if (votes.empty()) throw Error(ErrorKind::kParse, "election has no votes");
  try {
    return Election(std::move(roster), std::move(votes));
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Election LoadElection(const std::string& path) {
  return ParseElection(io_internal::ReadFile(path));
}

std::string FormatElection(const Election& election) {
  std::string out = "candidates:";
  for (const std::string& c : election.candidates()) out += " " + c;
  out += "\n";
  for (const Vote& v : election.votes()) {
    out += std::to_string(v.weight()) + ":";
    for (size_t p = 0; p < v.ranking().size(); ++p) {
      out += (p == 0 ? " " : " > ") + election.Token(v.ranking()[p]);
    }
    out += "\n";
  }
  return out;
}

void SaveElection(const Election& election, const std::string& path) {
  io_internal::WriteFile(path, FormatElection(election));
}

}  // namespace csr
