// voxanon/eval/similarity.h

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

#ifndef VOXANON_EVAL_SIMILARITY_H_
#define VOXANON_EVAL_SIMILARITY_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace voxanon {

/// A speech segment belonging to a speaker; written "speaker:segment".
struct SegmentRef {
  std::string speaker;
  std::string segment;

  auto operator<=>(const SegmentRef &) const = default;
  static SegmentRef Parse(const std::string &text);  // splits at the first ':'
  std::string ToString() const { return speaker + ":" + segment; }
};

/// LLRs between pairs of segments, plus the segment inventory per speaker.
class SegmentScores {
 public:
  void Set(const SegmentRef &a, const SegmentRef &b, double llr);
  /// Score of (a, b); falls back to (b, a) since verification scorers are
  /// symmetric in practice.  nullptr if neither is present.
  const double *Find(const SegmentRef &a, const SegmentRef &b) const;
  /// Segments seen for `speaker`, sorted.
  std::vector<std::string> SegmentsOf(const std::string &speaker) const;
  std::vector<std::string> Speakers() const;

 private:
  std::map<std::pair<SegmentRef, SegmentRef>, double> scores_;
  std::map<std::string, std::set<std::string>> segments_;
};

/// Square matrix of logistic(mean LLR) between speakers.
struct SimilarityMatrix {
  std::vector<std::string> speaker_ids;
  std::vector<std::vector<double>> values;  // values[i][j]

  std::size_t size() const { return speaker_ids.size(); }
};

double Logistic(double x);

/**
   Voice similarity matrix.  Cell (i, j) is the logistic of the mean LLR
   over all segment pairs (k of speaker i, l of speaker j); on the diagonal
   pairs with k == l are excluded, leaving n_i (n_i - 1) terms.  Missing
   scores raise DataError naming the pair; a speaker with fewer than two
   segments or none at all raises DataError.
*/
SimilarityMatrix ComputeSimilarityMatrix(const SegmentScores &scores,
                                         const std::vector<std::string> &speakers);

/// |mean(diagonal) - mean(off-diagonal)|; requires N >= 2.
double DiagonalDominance(const SimilarityMatrix &m);

/// 10 log10(D(anonymized) / D(original)) in dB.  A zero dominance on either
/// side raises MetricUndefinedError.
double GainOfVoiceDistinctiveness(const SimilarityMatrix &original,
                                  const SimilarityMatrix &anonymized);

}  // namespace voxanon

#endif  // VOXANON_EVAL_SIMILARITY_H_
