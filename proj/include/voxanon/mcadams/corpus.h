// voxanon/mcadams/corpus.h

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

#ifndef VOXANON_MCADAMS_CORPUS_H_
#define VOXANON_MCADAMS_CORPUS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "voxanon/harness/manifest.h"
#include "voxanon/mcadams/mcadams.h"

namespace voxanon {

/// SpeakerLevel: one pseudo-speaker per (subset role, speaker), so a
/// speaker's enrollment and trial utterances get different coefficients.
/// UtteranceLevel: an independent coefficient per utterance.
enum class AnonLevel { kSpeakerLevel, kUtteranceLevel };

AnonLevel ParseAnonLevel(const std::string &name);

/// Key fed to SampleAlpha for a record under the given level.
std::string AlphaKey(const ManifestRecord &rec, AnonLevel level);

struct AlphaAssignment {
  std::string utt_id;
  std::string speaker_id;
  double alpha = 0.0;
};

struct UtteranceFailure {
  std::string utt_id;
  std::string message;
};

struct CorpusReport {
  std::vector<AlphaAssignment> assignments;  // manifest order
  std::vector<UtteranceFailure> failures;    // manifest order
};

/// Output location for a record: out_dir / audio_path when the manifest
/// path is relative and stays below out_dir, else out_dir / file name.
std::filesystem::path AnonymizedPath(const ManifestRecord &rec,
                                     const std::filesystem::path &out_dir);

/**
   Anonymizes every utterance of `manifest` into `out_dir`.  Utterances are
   processed by up to `num_threads` workers (0 = hardware concurrency);
   results are reported in manifest order regardless of completion order.
   An unreadable input or a numerical failure is recorded in
   `failures` and processing continues.  Alpha assignments are produced for
   every record, including failed ones, since they depend only on the keys.
*/
CorpusReport AnonymizeCorpus(const Manifest &manifest, AnonLevel level,
                             const McAdamsConfig &cfg,
                             const std::filesystem::path &out_dir,
                             unsigned num_threads = 0);

/// Writes `utt_id<TAB>speaker_id<TAB>alpha` lines, alpha with 17
/// significant digits.
void WriteAlphaReport(const CorpusReport &report, const std::filesystem::path &path);

}  // namespace voxanon

#endif  // VOXANON_MCADAMS_CORPUS_H_
