// eval/wer.cc

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

#include "voxanon/eval/wer.h"

#include <algorithm>
#include <cctype>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"

namespace voxanon {

WordSequence Tokenize(std::string_view text) {
  WordSequence out;
  for (std::string tok : SplitWhitespace(text)) {
    auto is_punct = [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; };
    auto first = std::find_if_not(tok.begin(), tok.end(), is_punct);
    auto last = std::find_if_not(tok.rbegin(), tok.rend(), is_punct).base();
    if (first >= last) continue;
    std::string word(first, last);
    for (char &c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out.push_back(std::move(word));
  }
  return out;
}

WerResult ComputeWer(const WordSequence &reference, const WordSequence &hypothesis) {
  if (reference.empty()) throw ArgumentError("ComputeWer: empty reference");
  const std::size_t n = reference.size(), m = hypothesis.size();
  // cost[i][j]: edits turning reference[0, i) into hypothesis[0, j).
  std::vector<std::vector<std::size_t>> cost(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) cost[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) cost[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t diag = cost[i - 1][j - 1] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      cost[i][j] = std::min({diag, cost[i][j - 1] + 1, cost[i - 1][j] + 1});
    }
  }

  WerResult r;
  r.n_ref = n;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      bool same = reference[i - 1] == hypothesis[j - 1];
      if (cost[i][j] == cost[i - 1][j - 1] + (same ? 0 : 1)) {
        if (!same) ++r.n_sub;
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && cost[i][j] == cost[i][j - 1] + 1) {
      ++r.n_ins;
      --j;
    } else {
      ++r.n_del;
      --i;
    }
  }
  r.wer = static_cast<double>(r.errors()) / static_cast<double>(n);
  return r;
}

WerResult ComputeCorpusWer(const std::map<std::string, WordSequence> &reference,
                           const std::map<std::string, WordSequence> &hypothesis) {
  for (const auto &[utt, words] : hypothesis)
    if (!reference.count(utt)) throw DataError("hypothesis for unknown utterance '" + utt + "'");
  WerResult total;
  const WordSequence empty;
  for (const auto &[utt, ref] : reference) {
    if (ref.empty()) continue;
    auto it = hypothesis.find(utt);
    WerResult r = ComputeWer(ref, it == hypothesis.end() ? empty : it->second);
    total.n_sub += r.n_sub;
    total.n_del += r.n_del;
    total.n_ins += r.n_ins;
    total.n_ref += r.n_ref;
  }
  if (total.n_ref == 0) throw ArgumentError("ComputeCorpusWer: no reference words");
  total.wer = static_cast<double>(total.errors()) / static_cast<double>(total.n_ref);
  return total;
}

}  // namespace voxanon
