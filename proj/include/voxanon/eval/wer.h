// voxanon/eval/wer.h

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

#ifndef VOXANON_EVAL_WER_H_
#define VOXANON_EVAL_WER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace voxanon {

using WordSequence = std::vector<std::string>;

/// Whitespace tokenization; each token is upper-cased and stripped of
/// leading/trailing ASCII punctuation.  Tokens that become empty are dropped.
WordSequence Tokenize(std::string_view text);

struct WerResult {
  double wer = 0.0;  // errors / n_ref; can exceed 1
  std::size_t n_sub = 0;
  std::size_t n_del = 0;
  std::size_t n_ins = 0;
  std::size_t n_ref = 0;

  std::size_t errors() const { return n_sub + n_del + n_ins; }
};

/// Unit-cost Levenshtein alignment of hypothesis to reference.  Among
/// alignments of equal cost the backtrace prefers substitution (or match),
/// then insertion, then deletion.  Empty reference -> ArgumentError.
WerResult ComputeWer(const WordSequence &reference, const WordSequence &hypothesis);

/// Sums error and reference counts over utterances (corpus-level WER).
/// Utterances present in `reference` but missing from `hypothesis` are
/// scored against an empty hypothesis; extra hypotheses raise DataError.
WerResult ComputeCorpusWer(const std::map<std::string, WordSequence> &reference,
                           const std::map<std::string, WordSequence> &hypothesis);

}  // namespace voxanon

#endif  // VOXANON_EVAL_WER_H_
