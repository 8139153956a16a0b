// voxanon/eval/det.h

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

#ifndef VOXANON_EVAL_DET_H_
#define VOXANON_EVAL_DET_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace voxanon {

enum class TrialLabel { kTarget, kNontarget };

struct Trial {
  std::string enroll_id;
  std::string trial_id;
  TrialLabel label = TrialLabel::kNontarget;
};

/// Speaker-verification trials.  Add() rejects duplicate (enroll, trial)
/// pairs with DataError.
class TrialList {
 public:
  void Add(Trial trial);
  const std::vector<Trial> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t NumTargets() const;

 private:
  std::vector<Trial> entries_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

/// LLR scores keyed by (enroll_id, trial_id).
class ScoreSet {
 public:
  /// Throws DataError on a duplicate key or a non-finite score.
  void Set(const std::string &enroll_id, const std::string &trial_id, double llr);
  /// nullptr if absent.
  const double *Find(const std::string &enroll_id, const std::string &trial_id) const;
  std::size_t size() const { return scores_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

struct DetPoint {
  double threshold;
  double p_fa;
  double p_miss;
};

/// Operating points of a threshold detector that accepts iff score >= threshold.
/// Thresholds strictly increase; p_fa is non-increasing and p_miss
/// non-decreasing along the curve.
struct DetCurve {
  std::vector<DetPoint> points;
};

/// Separates the scores of `trials` into target and non-target lists.
/// A trial without a score raises DataError naming the pair.
void CollectScores(const ScoreSet &scores, const TrialList &trials,
                   std::vector<double> *target, std::vector<double> *nontarget);

/// Curve sampled at every distinct score, plus one threshold just below the
/// minimum (everything accepted) and one just above the maximum (everything
/// rejected).  Both score lists must be non-empty.
DetCurve ComputeDet(std::span<const double> target, std::span<const double> nontarget);
DetCurve ComputeDet(const ScoreSet &scores, const TrialList &trials);

/// Equal error rate as a proportion.  Takes the curve point minimising
/// |p_fa - p_miss| (first such point in threshold order) and returns
/// (p_fa + p_miss) / 2 there; for an exact crossing that is the common
/// value.
double ComputeEer(const DetCurve &det);

/// Threshold at the point ComputeEer selects.
double EerThreshold(const DetCurve &det);

/// Writes "threshold,p_fa,p_miss" CSV with a header row.
std::string DetToCsv(const DetCurve &det);

}  // namespace voxanon

#endif  // VOXANON_EVAL_DET_H_
