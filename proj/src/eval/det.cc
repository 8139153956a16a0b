// eval/det.cc

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

#include "voxanon/eval/det.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"

namespace voxanon {

void TrialList::Add(Trial trial) {
  auto key = std::make_pair(trial.enroll_id, trial.trial_id);
  if (index_.count(key))
    throw DataError("duplicate trial (" + trial.enroll_id + ", " + trial.trial_id + ")");
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(trial));
}

std::size_t TrialList::NumTargets() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [](const Trial &t) { return t.label == TrialLabel::kTarget; }));
}

void ScoreSet::Set(const std::string &enroll_id, const std::string &trial_id, double llr) {
  if (!std::isfinite(llr))
    throw DataError("non-finite score for (" + enroll_id + ", " + trial_id + ")");
  if (!scores_.emplace(std::make_pair(enroll_id, trial_id), llr).second)
    throw DataError("duplicate score for (" + enroll_id + ", " + trial_id + ")");
}

const double *ScoreSet::Find(const std::string &enroll_id, const std::string &trial_id) const {
  auto it = scores_.find(std::make_pair(enroll_id, trial_id));
  return it == scores_.end() ? nullptr : &it->second;
}

void CollectScores(const ScoreSet &scores, const TrialList &trials,
                   std::vector<double> *target, std::vector<double> *nontarget) {
  target->clear();
  nontarget->clear();
  for (const Trial &t : trials.entries()) {
    const double *s = scores.Find(t.enroll_id, t.trial_id);
    if (s == nullptr)
      throw DataError("no score for trial (" + t.enroll_id + ", " + t.trial_id + ")");
    (t.label == TrialLabel::kTarget ? target : nontarget)->push_back(*s);
  }
}

DetCurve ComputeDet(std::span<const double> target, std::span<const double> nontarget) {
  if (target.empty() || nontarget.empty())
    throw DataError("DET needs at least one target and one non-target score");
  std::vector<double> tar(target.begin(), target.end());
  std::vector<double> non(nontarget.begin(), nontarget.end());
  std::sort(tar.begin(), tar.end());
  std::sort(non.begin(), non.end());
  std::vector<double> all;
  all.reserve(tar.size() + non.size());
  std::merge(tar.begin(), tar.end(), non.begin(), non.end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> thresholds;
  thresholds.reserve(all.size() + 2);
  thresholds.push_back(std::nextafter(all.front(), -inf));
  thresholds.insert(thresholds.end(), all.begin(), all.end());
  thresholds.push_back(std::nextafter(all.back(), inf));

  const double n_tar = static_cast<double>(tar.size());
  const double n_non = static_cast<double>(non.size());
  DetCurve det;
  det.points.reserve(thresholds.size());
  std::size_t below_tar = 0, below_non = 0;  // counts of scores < threshold
  for (double theta : thresholds) {
    while (below_tar < tar.size() && tar[below_tar] < theta) ++below_tar;
    while (below_non < non.size() && non[below_non] < theta) ++below_non;
    det.points.push_back({theta, static_cast<double>(non.size() - below_non) / n_non,
                          static_cast<double>(below_tar) / n_tar});
  }
  return det;
}

DetCurve ComputeDet(const ScoreSet &scores, const TrialList &trials) {
  std::vector<double> target, nontarget;
  CollectScores(scores, trials, &target, &nontarget);
  return ComputeDet(target, nontarget);
}

namespace {

std::size_t EerIndex(const DetCurve &det) {
  if (det.points.empty()) throw ArgumentError("ComputeEer: empty DET curve");
  std::size_t best = 0;
  double best_gap = std::abs(det.points[0].p_fa - det.points[0].p_miss);
  for (std::size_t i = 1; i < det.points.size(); ++i) {
    double gap = std::abs(det.points[i].p_fa - det.points[i].p_miss);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

}  // namespace

double ComputeEer(const DetCurve &det) {
  const DetPoint &p = det.points[EerIndex(det)];
  return 0.5 * (p.p_fa + p.p_miss);
}

double EerThreshold(const DetCurve &det) { return det.points[EerIndex(det)].threshold; }

std::string DetToCsv(const DetCurve &det) {
  std::string out = "threshold,p_fa,p_miss\n";
  for (const DetPoint &p : det.points)
    out += FormatDouble(p.threshold) + "," + FormatDouble(p.p_fa) + "," +
           FormatDouble(p.p_miss) + "\n";
  return out;
}

}  // namespace voxanon
