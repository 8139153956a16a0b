// eval/table-io.cc

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

#include "voxanon/eval/table-io.h"

#include <fstream>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"

namespace voxanon {

TrialList ReadTrials(const std::filesystem::path &path) {
  TrialList trials;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitWhitespace(line);
    if (cols.size() != 3)
      throw ParseError(path.string(), line_no, "expected 'enroll_id trial_id target|nontarget'");
    Trial t{cols[0], cols[1], TrialLabel::kNontarget};
    if (cols[2] == "target") t.label = TrialLabel::kTarget;
    else if (cols[2] != "nontarget")
      throw ParseError(path.string(), line_no, "bad label '" + cols[2] + "'");
    try {
      trials.Add(std::move(t));
    } catch (const DataError &e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  });
  return trials;
}

ScoreSet ReadScores(const std::filesystem::path &path) {
  ScoreSet scores;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitWhitespace(line);
    if (cols.size() != 3)
      throw ParseError(path.string(), line_no, "expected 'enroll_id trial_id llr'");
    try {
      scores.Set(cols[0], cols[1], ParseDouble(cols[2]));
    } catch (const Error &e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  });
  return scores;
}

std::map<std::string, WordSequence> ReadTranscripts(const std::filesystem::path &path) {
  std::map<std::string, WordSequence> out;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::size_t first = line.find_first_not_of(" \t");
    std::size_t end_id = line.find_first_of(" \t", first);
    std::string utt = line.substr(first, end_id == std::string::npos ? std::string::npos
                                                                     : end_id - first);
    WordSequence words =
        end_id == std::string::npos ? WordSequence{} : Tokenize(std::string_view(line).substr(end_id));
    if (!out.emplace(utt, std::move(words)).second)
      throw ParseError(path.string(), line_no, "duplicate utterance '" + utt + "'");
  });
  return out;
}

SegmentScores ReadSegmentScores(const std::filesystem::path &path) {
  SegmentScores scores;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitWhitespace(line);
    if (cols.size() != 3)
      throw ParseError(path.string(), line_no, "expected 'spk:seg spk:seg llr'");
    try {
      scores.Set(SegmentRef::Parse(cols[0]), SegmentRef::Parse(cols[1]), ParseDouble(cols[2]));
    } catch (const Error &e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  });
  return scores;
}

void WriteTextFile(const std::filesystem::path &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace voxanon
