// voxanon/harness/ranking.h

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

#ifndef VOXANON_HARNESS_RANKING_H_
#define VOXANON_HARNESS_RANKING_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace voxanon {

/// Minimum weighted EER (percent) of each evaluation condition 1..4.
inline constexpr std::array<double, 4> kConditionMinEer{15.0, 20.0, 25.0, 30.0};

/// Per-dataset metrics; each is absent when its inputs were not supplied.
/// EER and WER are in percent, G_VD in dB.
struct DatasetResult {
  std::optional<double> eer;
  std::optional<double> wer;
  std::optional<double> rho_f0;
  std::size_t rho_undefined = 0;
  std::optional<double> g_vd;
};

struct SubmissionReport {
  std::string system_id;
  std::map<std::string, DatasetResult> per_dataset;
  std::optional<double> weighted_eer;  // percent
  std::optional<double> avg_wer;       // percent
  std::optional<double> weighted_rho;
  bool rho_pass = false;
  /// Set only when rho_pass and weighted_eer >= 15.
  std::optional<int> condition;
};

/// Highest condition i with weighted_eer >= kConditionMinEer[i-1], or none
/// when the pitch gate failed or the EER is below 15%.  Intervals are
/// [15,20), [20,25), [25,30), [30,100].
std::optional<int> AssignCondition(double weighted_eer, bool rho_pass);

/// Per-condition qualification flags (a system with EER 27% qualifies for
/// conditions 1-3 and is assigned condition 3).
std::array<bool, 4> QualifyingConditions(double weighted_eer, bool rho_pass);

struct RankedEntry {
  std::string system_id;
  double weighted_eer = 0.0;
  double avg_wer = 0.0;
  int rank = 0;  // 1-based within its condition
};

struct ConditionTable {
  std::array<std::vector<RankedEntry>, 4> conditions;
  /// Systems without a condition or without an average WER.
  std::vector<std::string> unranked;
};

/// Within each assigned condition, systems are sorted by ascending average
/// WER, ties broken by system id.
ConditionTable RankSystems(const std::vector<SubmissionReport> &reports);

/// One row per system:
/// system_id,weighted_eer,avg_wer,condition,rank,qualifies_1..qualifies_4
/// Ranked systems come first (condition order, then rank); unranked
/// systems follow with condition "none" and an empty rank.
std::string RankingCsv(const std::vector<SubmissionReport> &reports,
                       const ConditionTable &table);

/// Single-row summary CSV emitted by the pipeline and consumed by `rank`.
std::string SummaryCsv(const SubmissionReport &report);
SubmissionReport ReadSummaryCsv(const std::filesystem::path &path);

}  // namespace voxanon

#endif  // VOXANON_HARNESS_RANKING_H_
