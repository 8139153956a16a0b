// eval/similarity.cc

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

#include "voxanon/eval/similarity.h"

#include <cmath>

#include "voxanon/base/errors.h"

namespace voxanon {

SegmentRef SegmentRef::Parse(const std::string &text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw FormatError("segment id '" + text + "' is not of the form speaker:segment");
  return {text.substr(0, colon), text.substr(colon + 1)};
}

void SegmentScores::Set(const SegmentRef &a, const SegmentRef &b, double llr) {
  if (!std::isfinite(llr))
    throw DataError("non-finite LLR for (" + a.ToString() + ", " + b.ToString() + ")");
  if (!scores_.emplace(std::make_pair(a, b), llr).second)
    throw DataError("duplicate LLR for (" + a.ToString() + ", " + b.ToString() + ")");
  segments_[a.speaker].insert(a.segment);
  segments_[b.speaker].insert(b.segment);
}

const double *SegmentScores::Find(const SegmentRef &a, const SegmentRef &b) const {
  auto it = scores_.find(std::make_pair(a, b));
  if (it == scores_.end()) it = scores_.find(std::make_pair(b, a));
  return it == scores_.end() ? nullptr : &it->second;
}

std::vector<std::string> SegmentScores::SegmentsOf(const std::string &speaker) const {
  auto it = segments_.find(speaker);
  if (it == segments_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<std::string> SegmentScores::Speakers() const {
  std::vector<std::string> out;
  for (const auto &[spk, segs] : segments_) out.push_back(spk);
  return out;
}

double Logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

SimilarityMatrix ComputeSimilarityMatrix(const SegmentScores &scores,
                                         const std::vector<std::string> &speakers) {
  const std::size_t n = speakers.size();
  std::vector<std::vector<std::string>> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    segs[i] = scores.SegmentsOf(speakers[i]);
    if (segs[i].size() < 2)
      throw DataError("speaker '" + speakers[i] + "' has " + std::to_string(segs[i].size()) +
                      " segment(s); the diagonal needs at least 2");
  }
  SimilarityMatrix m;
  m.speaker_ids = speakers;
  m.values.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t k = 0; k < segs[i].size(); ++k) {
        for (std::size_t l = 0; l < segs[j].size(); ++l) {
          if (i == j && k == l) continue;
          SegmentRef a{speakers[i], segs[i][k]}, b{speakers[j], segs[j][l]};
          const double *llr = scores.Find(a, b);
          if (llr == nullptr)
            throw DataError("missing LLR for (" + a.ToString() + ", " + b.ToString() + ")");
          sum += *llr;
          ++count;
        }
      }
      m.values[i][j] = Logistic(sum / static_cast<double>(count));
    }
  }
  return m;
}

double DiagonalDominance(const SimilarityMatrix &m) {
  const std::size_t n = m.size();
  if (n < 2) throw ArgumentError("DiagonalDominance: need at least 2 speakers");
  double diag = 0.0, off = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.values.size() != n || m.values[i].size() != n)
      throw ArgumentError("DiagonalDominance: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) (i == j ? diag : off) += m.values[i][j];
  }
  const double nd = static_cast<double>(n);
  return std::abs(diag / nd - off / (nd * (nd - 1.0)));
}

double GainOfVoiceDistinctiveness(const SimilarityMatrix &original,
                                  const SimilarityMatrix &anonymized) {
  const double d_orig = DiagonalDominance(original);
  const double d_anon = DiagonalDominance(anonymized);
  if (d_orig == 0.0 || d_anon == 0.0)
    throw MetricUndefinedError("G_VD undefined: zero diagonal dominance");
  return 10.0 * std::log10(d_anon / d_orig);
}

}  // namespace voxanon
