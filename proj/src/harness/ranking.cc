// harness/ranking.cc

// Copyright 2026  The voxanon Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "voxanon/harness/ranking.h"

#include <algorithm>
#include <fstream>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"

namespace voxanon {

namespace {

const char kSummaryHeader[] = "system_id,weighted_eer,avg_wer,weighted_rho,rho_pass,condition";

std::string Optional(const std::optional<double> &v) {
  return v ? FormatDouble(*v) : std::string("missing");
}

std::optional<double> ParseOptional(const std::string &s) {
  if (s == "missing" || s.empty()) return std::nullopt;
  return ParseDouble(s);
}

std::vector<std::string> SplitCommas(const std::string &line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

std::optional<int> AssignCondition(double weighted_eer, bool rho_pass) {
  if (!rho_pass) return std::nullopt;
  std::optional<int> condition;
  for (std::size_t i = 0; i < kConditionMinEer.size(); ++i)
    if (weighted_eer >= kConditionMinEer[i]) condition = static_cast<int>(i) + 1;
  return condition;
}

std::array<bool, 4> QualifyingConditions(double weighted_eer, bool rho_pass) {
  std::array<bool, 4> q{};
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = rho_pass && weighted_eer >= kConditionMinEer[i];
  return q;
}

ConditionTable RankSystems(const std::vector<SubmissionReport> &reports) {
  ConditionTable table;
  for (const SubmissionReport &r : reports) {
    if (!r.condition || !r.avg_wer || !r.weighted_eer) {
      table.unranked.push_back(r.system_id);
      continue;
    }
    if (*r.condition < 1 || *r.condition > 4)
      throw DataError("system '" + r.system_id + "' has invalid condition " +
                      std::to_string(*r.condition));
    table.conditions[*r.condition - 1].push_back({r.system_id, *r.weighted_eer, *r.avg_wer, 0});
  }
  for (auto &entries : table.conditions) {
    std::sort(entries.begin(), entries.end(), [](const RankedEntry &a, const RankedEntry &b) {
      if (a.avg_wer != b.avg_wer) return a.avg_wer < b.avg_wer;
      return a.system_id < b.system_id;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = static_cast<int>(i) + 1;
  }
  std::sort(table.unranked.begin(), table.unranked.end());
  return table;
}

std::string RankingCsv(const std::vector<SubmissionReport> &reports,
                       const ConditionTable &table) {
  std::map<std::string, const SubmissionReport *> by_id;
  for (const SubmissionReport &r : reports) by_id[r.system_id] = &r;
  auto flags = [&](const std::string &id) {
    const SubmissionReport *r = by_id.at(id);
    std::array<bool, 4> q{};
    if (r->weighted_eer) q = QualifyingConditions(*r->weighted_eer, r->rho_pass);
    std::string s;
    for (bool b : q) s += b ? ",1" : ",0";
    return s;
  };
  std::string out = "system_id,weighted_eer,avg_wer,condition,rank,qualifies_1,qualifies_2,"
                    "qualifies_3,qualifies_4\n";
  for (std::size_t c = 0; c < table.conditions.size(); ++c)
    for (const RankedEntry &e : table.conditions[c])
      out += e.system_id + "," + FormatDouble(e.weighted_eer) + "," + FormatDouble(e.avg_wer) +
             "," + std::to_string(c + 1) + "," + std::to_string(e.rank) + flags(e.system_id) + "\n";
  for (const std::string &id : table.unranked) {
    const SubmissionReport *r = by_id.at(id);
    out += id + "," + Optional(r->weighted_eer) + "," + Optional(r->avg_wer) + ",none," +
           flags(id) + "\n";
  }
  return out;
}

std::string SummaryCsv(const SubmissionReport &report) {
  return std::string(kSummaryHeader) + "\n" + report.system_id + "," +
         Optional(report.weighted_eer) + "," + Optional(report.avg_wer) + "," +
         Optional(report.weighted_rho) + "," + (report.rho_pass ? "1" : "0") + "," +
         (report.condition ? std::to_string(*report.condition) : std::string("none")) + "\n";
}

SubmissionReport ReadSummaryCsv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string header, row;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != kSummaryHeader) throw ParseError(path.string(), 1, "unexpected summary header");
  if (!std::getline(in, row)) throw ParseError(path.string(), 2, "missing summary row");
  if (!row.empty() && row.back() == '\r') row.pop_back();
  std::vector<std::string> cols = SplitCommas(row);
  if (cols.size() != 6) throw ParseError(path.string(), 2, "expected 6 columns");
  SubmissionReport r;
  try {
    r.system_id = cols[0];
    r.weighted_eer = ParseOptional(cols[1]);
    r.avg_wer = ParseOptional(cols[2]);
    r.weighted_rho = ParseOptional(cols[3]);
    if (cols[4] != "0" && cols[4] != "1") throw FormatError("rho_pass must be 0 or 1");
    r.rho_pass = cols[4] == "1";
  } catch (const FormatError &e) {
    throw ParseError(path.string(), 2, e.what());
  }
  // The condition is re-derived rather than trusted from the file.
  if (r.weighted_eer) r.condition = AssignCondition(*r.weighted_eer, r.rho_pass);
  return r;
}

}  // namespace voxanon
