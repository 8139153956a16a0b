// harness/pipeline.cc

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

#include "voxanon/harness/pipeline.h"

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "json.hpp"

#include "voxanon/audio/waveform.h"
#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"
#include "voxanon/eval/det.h"
#include "voxanon/eval/similarity.h"
#include "voxanon/eval/table-io.h"
#include "voxanon/eval/wer.h"
#include "voxanon/harness/manifest.h"

namespace voxanon {

namespace {

using nlohmann::json;

std::filesystem::path PathField(const json &obj, const char *key,
                                const std::filesystem::path &base_dir) {
  if (!obj.contains(key)) return {};
  std::filesystem::path p(obj.at(key).get<std::string>());
  if (p.empty()) throw ConfigError(std::string("empty path for '") + key + "'");
  return p.is_absolute() ? p : base_dir / p;
}

template <typename T>
void ReadField(const json &obj, const char *key, T *out) {
  if (obj.contains(key)) *out = obj.at(key).get<T>();
}

void CheckKeys(const json &obj, const std::vector<std::string> &allowed, const std::string &where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const std::string &k : allowed) ok = ok || k == it.key();
    if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

// Everything one dataset contributes; `missing` lists skipped metrics.
struct DatasetOutcome {
  DatasetResult result;
  std::vector<std::string> missing;
};

DatasetOutcome EvaluateDataset(const std::string &tag, const DatasetInputs &in,
                               const PitchConfig &pitch) {
  DatasetOutcome out;
  auto skip = [&](const std::string &metric, const std::string &reason) {
    out.missing.push_back(tag + ": " + metric + " (" + reason + ")");
  };

  if (!in.trials.empty() && !in.scores.empty()) {
    DetCurve det = ComputeDet(ReadScores(in.scores), ReadTrials(in.trials));
    out.result.eer = 100.0 * ComputeEer(det);
  } else {
    skip("eer", "missing input: trials/scores");
  }

  if (!in.ref_transcripts.empty() && !in.hyp_transcripts.empty()) {
    WerResult w = ComputeCorpusWer(ReadTranscripts(in.ref_transcripts),
                                   ReadTranscripts(in.hyp_transcripts));
    out.result.wer = 100.0 * w.wer;
  } else {
    skip("wer", "missing input: transcripts");
  }

  std::optional<DatasetRho> rho;
  if (!in.pitch_orig.empty() && !in.pitch_anon.empty()) {
    std::map<std::string, PitchTrack> orig = ReadPitchTracks(in.pitch_orig);
    std::map<std::string, PitchTrack> anon = ReadPitchTracks(in.pitch_anon);
    std::vector<std::pair<PitchTrack, PitchTrack>> pairs;
    for (auto &[utt, track] : orig) {
      auto it = anon.find(utt);
      if (it == anon.end()) throw DataError("no anonymized pitch track for '" + utt + "'");
      pairs.emplace_back(std::move(track), std::move(it->second));
    }
    try {
      rho = ComputeDatasetRho(pairs, pitch);
    } catch (const MetricUndefinedError &e) {
      skip("rho_f0", e.what());
    }
  } else if (!in.manifest.empty() && !in.anon_dir.empty()) {
    Manifest manifest = LoadManifest(in.manifest);
    std::vector<std::pair<Waveform, Waveform>> pairs;
    for (const ManifestRecord &rec : manifest.records)
      pairs.emplace_back(ReadWav(manifest.Resolve(rec)), ReadWav(AnonymizedPath(rec, in.anon_dir)));
    try {
      rho = ComputeDatasetRho(pairs, pitch);
    } catch (const MetricUndefinedError &e) {
      skip("rho_f0", e.what());
    }
  } else {
    skip("rho_f0", "missing input: pitch tracks or manifest/anon_dir");
  }
  if (rho) {
    out.result.rho_f0 = rho->rho;
    out.result.rho_undefined = rho->num_undefined;
  }

  if (!in.segment_scores_orig.empty() && !in.segment_scores_anon.empty()) {
    SegmentScores orig = ReadSegmentScores(in.segment_scores_orig);
    SegmentScores anon = ReadSegmentScores(in.segment_scores_anon);
    std::vector<std::string> speakers = orig.Speakers();
    try {
      out.result.g_vd = GainOfVoiceDistinctiveness(ComputeSimilarityMatrix(orig, speakers),
                                                   ComputeSimilarityMatrix(anon, speakers));
    } catch (const MetricUndefinedError &e) {
      skip("g_vd", e.what());
    }
  } else {
    skip("g_vd", "missing input: segment scores");
  }
  return out;
}

std::string Cell(const std::optional<double> &v) {
  return v ? FormatDouble(*v) : std::string("missing");
}

std::string Fixed(const std::optional<double> &v, int digits) {
  return v ? FormatFixed(*v, digits) : std::string("missing");
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

PipelineConfig ParsePipelineConfig(const std::string &json_text,
                                   const std::filesystem::path &base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception &e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  PipelineConfig cfg;
  try {
    CheckKeys(root, {"system_id", "seed", "eer_weights", "wer_datasets", "pitch", "anonymize",
                     "datasets"},
              "config");
    ReadField(root, "system_id", &cfg.system_id);
    ReadField(root, "seed", &cfg.seed);
    ReadField(root, "wer_datasets", &cfg.wer_datasets);
    if (root.contains("eer_weights")) {
      const json &w = root.at("eer_weights");
      if (w.is_string()) {
        cfg.eer_weights = NamedWeightProfile(w.get<std::string>());
      } else {
        cfg.eer_weights = w.get<WeightProfile>();
      }
    }
    if (root.contains("pitch")) {
      const json &p = root.at("pitch");
      CheckKeys(p, {"f0_min_hz", "f0_max_hz", "frame_ms", "hop_ms", "voicing_threshold",
                    "energy_floor_db", "max_lag_frames"},
                "pitch");
      ReadField(p, "f0_min_hz", &cfg.pitch.f0_min_hz);
      ReadField(p, "f0_max_hz", &cfg.pitch.f0_max_hz);
      ReadField(p, "frame_ms", &cfg.pitch.frame_ms);
      ReadField(p, "hop_ms", &cfg.pitch.hop_ms);
      ReadField(p, "voicing_threshold", &cfg.pitch.voicing_threshold);
      ReadField(p, "energy_floor_db", &cfg.pitch.energy_floor_db);
      ReadField(p, "max_lag_frames", &cfg.pitch.max_lag_frames);
      cfg.pitch.Check();
    }
    if (root.contains("anonymize")) {
      const json &a = root.at("anonymize");
      CheckKeys(a, {"level", "alpha_min", "alpha_max", "lpc_order", "frame_ms", "hop_ms",
                    "threads"},
                "anonymize");
      AnonymizeStage stage;
      if (a.contains("level")) stage.level = ParseAnonLevel(a.at("level").get<std::string>());
      ReadField(a, "alpha_min", &stage.mcadams.alpha_min);
      ReadField(a, "alpha_max", &stage.mcadams.alpha_max);
      ReadField(a, "lpc_order", &stage.mcadams.lpc_order);
      ReadField(a, "frame_ms", &stage.mcadams.frame_ms);
      ReadField(a, "hop_ms", &stage.mcadams.hop_ms);
      ReadField(a, "threads", &stage.num_threads);
      stage.mcadams.Check();
      cfg.anonymize = stage;
    }
    if (!root.contains("datasets")) throw ConfigError("config has no 'datasets'");
    const json &datasets = root.at("datasets");
    if (!datasets.is_object() || datasets.empty())
      throw ConfigError("'datasets' must be a non-empty object");
    for (auto it = datasets.begin(); it != datasets.end(); ++it) {
      const json &d = it.value();
      CheckKeys(d, {"trials", "scores", "ref_transcripts", "hyp_transcripts", "manifest",
                    "anon_dir", "pitch_orig", "pitch_anon", "segment_scores_orig",
                    "segment_scores_anon"},
                "dataset '" + it.key() + "'");
      DatasetInputs in;
      in.trials = PathField(d, "trials", base_dir);
      in.scores = PathField(d, "scores", base_dir);
      in.ref_transcripts = PathField(d, "ref_transcripts", base_dir);
      in.hyp_transcripts = PathField(d, "hyp_transcripts", base_dir);
      in.manifest = PathField(d, "manifest", base_dir);
      in.anon_dir = PathField(d, "anon_dir", base_dir);
      in.pitch_orig = PathField(d, "pitch_orig", base_dir);
      in.pitch_anon = PathField(d, "pitch_anon", base_dir);
      in.segment_scores_orig = PathField(d, "segment_scores_orig", base_dir);
      in.segment_scores_anon = PathField(d, "segment_scores_anon", base_dir);
      if (cfg.anonymize && (in.manifest.empty() || in.anon_dir.empty()))
        throw ConfigError("dataset '" + it.key() +
                          "' needs manifest and anon_dir for the anonymize stage");
      cfg.datasets.emplace(it.key(), std::move(in));
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  for (const std::string &tag : cfg.wer_datasets)
    if (!cfg.datasets.count(tag)) throw ConfigError("wer_datasets names unknown dataset '" + tag + "'");
  return cfg;
}

PipelineConfig LoadPipelineConfig(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream text;
  text << in.rdbuf();
  return ParsePipelineConfig(text.str(), path.parent_path());
}

PipelineResult RunPipeline(const PipelineConfig &config) {
  PipelineResult result;
  SubmissionReport &report = result.report;
  report.system_id = config.system_id;

  if (config.anonymize) {
    McAdamsConfig mc = config.anonymize->mcadams;
    mc.seed = config.seed;
    for (const auto &[tag, in] : config.datasets) {
      std::filesystem::create_directories(in.anon_dir);
      CorpusReport part = AnonymizeCorpus(LoadManifest(in.manifest), config.anonymize->level, mc,
                                          in.anon_dir, config.anonymize->num_threads);
      for (AlphaAssignment &a : part.assignments) result.anonymization.assignments.push_back(a);
      for (UtteranceFailure &f : part.failures) {
        f.utt_id = tag + "/" + f.utt_id;
        result.anonymization.failures.push_back(f);
      }
    }
    if (!result.anonymization.failures.empty())
      throw DataError(std::to_string(result.anonymization.failures.size()) +
                      " utterance(s) failed anonymization, first: " +
                      result.anonymization.failures.front().utt_id + ": " +
                      result.anonymization.failures.front().message);
  }

  std::map<std::string, std::future<DatasetOutcome>> jobs;
  for (const auto &[tag, in] : config.datasets)
    jobs.emplace(tag, std::async(std::launch::async, EvaluateDataset, tag, std::cref(in),
                                 std::cref(config.pitch)));
  // Gather every job before rethrowing so no thread outlives the inputs.
  std::optional<std::string> first_error;
  for (auto &[tag, job] : jobs) {
    try {
      DatasetOutcome o = job.get();
      report.per_dataset[tag] = o.result;
      for (std::string &m : o.missing) result.missing.push_back(std::move(m));
    } catch (const std::exception &e) {
      if (!first_error) first_error = "dataset '" + tag + "': " + e.what();
    }
  }
  if (first_error) throw DataError(*first_error);

  // Weighted EER and weighted rho over the configured profile.
  if (config.eer_weights) {
    DatasetValues eers, rhos;
    bool all_eer = true, all_rho = true;
    for (const auto &[tag, w] : *config.eer_weights) {
      auto it = report.per_dataset.find(tag);
      if (it == report.per_dataset.end()) {
        throw ConfigError("eer_weights names unknown dataset '" + tag + "'");
      }
      if (it->second.eer) eers[tag] = *it->second.eer; else all_eer = false;
      if (it->second.rho_f0) rhos[tag] = *it->second.rho_f0; else all_rho = false;
    }
    if (all_eer) report.weighted_eer = WeightedAverageEer(eers, *config.eer_weights);
    else result.missing.push_back("weighted_eer (an eer_weights dataset has no EER)");
    if (all_rho) report.weighted_rho = WeightedAverage(rhos, *config.eer_weights);
    else result.missing.push_back("weighted_rho (an eer_weights dataset has no rho_f0)");
  } else {
    result.missing.push_back("weighted_eer (eer_weights not configured)");
    result.missing.push_back("weighted_rho (eer_weights not configured)");
  }

  DatasetValues wers;
  bool all_wer = true;
  if (config.wer_datasets.empty()) {
    for (const auto &[tag, r] : report.per_dataset)
      if (r.wer) wers[tag] = *r.wer;
  } else {
    for (const std::string &tag : config.wer_datasets) {
      const DatasetResult &r = report.per_dataset.at(tag);
      if (r.wer) wers[tag] = *r.wer; else all_wer = false;
    }
  }
  if (all_wer && !wers.empty()) report.avg_wer = AverageWer(wers);
  else result.missing.push_back("avg_wer (no complete WER set)");

  // The gate needs every dataset to have a defined rho above the bar.
  bool any_rho = false;
  report.rho_pass = true;
  for (const auto &[tag, r] : report.per_dataset) {
    if (!r.rho_f0) {
      report.rho_pass = false;
      continue;
    }
    any_rho = true;
    report.rho_pass = report.rho_pass && RhoPasses(*r.rho_f0);
  }
  report.rho_pass = report.rho_pass && any_rho;
  if (report.weighted_eer) report.condition = AssignCondition(*report.weighted_eer, report.rho_pass);

  result.status = result.missing.empty() ? PipelineStatus::kComplete : PipelineStatus::kPartial;
  return result;
}

std::string ResultsCsv(const SubmissionReport &report) {
  std::string out = "dataset,eer,wer,rho_f0,rho_undefined,g_vd\n";
  for (const auto &[tag, r] : report.per_dataset)
    out += tag + "," + Cell(r.eer) + "," + Cell(r.wer) + "," + Cell(r.rho_f0) + "," +
           std::to_string(r.rho_undefined) + "," + Cell(r.g_vd) + "\n";
  return out;
}

std::string ResultsSummaryText(const PipelineResult &result) {
  const SubmissionReport &report = result.report;
  std::string out = "System: " + report.system_id + "\n";
  out += "Status: " +
         std::string(result.status == PipelineStatus::kComplete ? "complete" : "partial") + "\n\n";
  out += Pad("Dataset", 24) + Pad("EER,%", 10) + Pad("WER,%", 10) + Pad("rho_F0", 10) + "G_VD,dB\n";
  for (const auto &[tag, r] : report.per_dataset)
    out += Pad(tag, 24) + Pad(Fixed(r.eer, 2), 10) + Pad(Fixed(r.wer, 2), 10) +
           Pad(Fixed(r.rho_f0, 2), 10) + Fixed(r.g_vd, 2) + "\n";
  out += "\n";
  out += "Weighted EER,%: " + Fixed(report.weighted_eer, 2) + "\n";
  out += "Average WER,%: " + Fixed(report.avg_wer, 2) + "\n";
  out += "Weighted rho_F0: " + Fixed(report.weighted_rho, 2) + "\n";
  out += std::string("rho_F0 gate (> 0.3 on every dataset): ") +
         (report.rho_pass ? "pass" : "fail") + "\n";
  out += "Condition: " +
         (report.condition ? std::to_string(*report.condition) : std::string("none")) + "\n";
  if (!result.missing.empty()) {
    out += "\nMissing:\n";
    for (const std::string &m : result.missing) out += "  " + m + "\n";
  }
  return out;
}

void WritePipelineOutputs(const PipelineResult &result, const std::filesystem::path &out_dir) {
  std::filesystem::create_directories(out_dir);
  WriteTextFile(out_dir / "results.csv", ResultsCsv(result.report));
  WriteTextFile(out_dir / "summary.csv", SummaryCsv(result.report));
  WriteTextFile(out_dir / "results_summary.txt", ResultsSummaryText(result));
  if (!result.anonymization.assignments.empty())
    WriteAlphaReport(result.anonymization, out_dir / "alphas.tsv");
}

int ExitCodeFor(PipelineStatus status) { return status == PipelineStatus::kComplete ? 0 : 3; }

}  // namespace voxanon
