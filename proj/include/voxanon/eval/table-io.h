// voxanon/eval/table-io.h

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

#ifndef VOXANON_EVAL_TABLE_IO_H_
#define VOXANON_EVAL_TABLE_IO_H_

#include <filesystem>
#include <map>
#include <string>

#include "voxanon/eval/det.h"
#include "voxanon/eval/similarity.h"
#include "voxanon/eval/wer.h"

namespace voxanon {

// Kaldi-style whitespace-separated tables.  Every reader throws ParseError
// with the offending line number on malformed input.

/// `enroll_id trial_id target|nontarget`
TrialList ReadTrials(const std::filesystem::path &path);

/// `enroll_id trial_id llr`
ScoreSet ReadScores(const std::filesystem::path &path);

/// `utt_id word1 word2 ...`, tokenized with Tokenize().  An utterance id
/// with no words maps to an empty sequence.
std::map<std::string, WordSequence> ReadTranscripts(const std::filesystem::path &path);

/// `spk_i:seg_k spk_j:seg_l llr`
SegmentScores ReadSegmentScores(const std::filesystem::path &path);

void WriteTextFile(const std::filesystem::path &path, const std::string &contents);

}  // namespace voxanon

#endif  // VOXANON_EVAL_TABLE_IO_H_
