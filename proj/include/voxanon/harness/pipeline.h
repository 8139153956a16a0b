// voxanon/harness/pipeline.h

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

#ifndef VOXANON_HARNESS_PIPELINE_H_
#define VOXANON_HARNESS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voxanon/eval/aggregate.h"
#include "voxanon/harness/ranking.h"
#include "voxanon/mcadams/corpus.h"
#include "voxanon/mcadams/mcadams.h"
#include "voxanon/pitch/pitch.h"

namespace voxanon {

/// Input files for one dataset tag.  An empty path means "not supplied";
/// the metrics that need it are then reported missing.
struct DatasetInputs {
  std::filesystem::path trials;           // EER
  std::filesystem::path scores;           // EER
  std::filesystem::path ref_transcripts;  // WER
  std::filesystem::path hyp_transcripts;  // WER
  std::filesystem::path manifest;         // rho from audio
  std::filesystem::path anon_dir;         // rho from audio
  std::filesystem::path pitch_orig;       // rho from precomputed tracks
  std::filesystem::path pitch_anon;
  std::filesystem::path segment_scores_orig;  // G_VD
  std::filesystem::path segment_scores_anon;
};

/// Optional first stage: McAdams anonymization of every dataset manifest
/// into its anon_dir.  The alpha assignments are written next to the
/// reports.
struct AnonymizeStage {
  AnonLevel level = AnonLevel::kSpeakerLevel;
  McAdamsConfig mcadams;
  unsigned num_threads = 0;
};

/**
   JSON configuration, e.g.

     {
       "system_id": "B2",
       "seed": 0,
       "eer_weights": "gender",            // or {"tag": weight, ...}
       "wer_datasets": ["libri_dev", "vctk_dev"],
       "pitch": {"f0_min_hz": 60, ...},    // optional
       "anonymize": {"level": "speaker", "alpha_min": 0.5, ...},  // optional
       "datasets": {"libri_dev_f": {"trials": "...", "scores": "...", ...}}
     }

   Relative paths are resolved against the config file's directory.
*/
struct PipelineConfig {
  std::string system_id = "system";
  uint64_t seed = 0;
  std::map<std::string, DatasetInputs> datasets;
  /// Absent: the weighted EER and weighted rho are reported missing.
  std::optional<WeightProfile> eer_weights;
  /// Datasets averaged into avg_wer; empty means every dataset with WER.
  std::vector<std::string> wer_datasets;
  PitchConfig pitch;
  std::optional<AnonymizeStage> anonymize;
};

PipelineConfig ParsePipelineConfig(const std::string &json_text,
                                   const std::filesystem::path &base_dir);
PipelineConfig LoadPipelineConfig(const std::filesystem::path &path);

enum class PipelineStatus { kComplete, kPartial };

struct PipelineResult {
  SubmissionReport report;
  /// Human-readable "dataset: metric (reason)" markers for skipped metrics.
  std::vector<std::string> missing;
  CorpusReport anonymization;
  PipelineStatus status = PipelineStatus::kComplete;
};

/// Computes every metric whose inputs are present; dataset jobs run
/// concurrently and are assembled in dataset-tag order.  Malformed or
/// inconsistent inputs throw.
PipelineResult RunPipeline(const PipelineConfig &config);

/// dataset,eer,wer,rho_f0,rho_undefined,g_vd (percent for EER/WER).
std::string ResultsCsv(const SubmissionReport &report);
std::string ResultsSummaryText(const PipelineResult &result);

/// Writes results.csv, summary.csv, results_summary.txt and, when the
/// anonymization stage ran, alphas.tsv.
void WritePipelineOutputs(const PipelineResult &result, const std::filesystem::path &out_dir);

/// 0 complete, 3 partial.  (Failures surface as exceptions; callers map
/// them to 1.)
int ExitCodeFor(PipelineStatus status);

}  // namespace voxanon

#endif  // VOXANON_HARNESS_PIPELINE_H_
