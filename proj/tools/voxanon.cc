// tools/voxanon.cc

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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "voxanon/audio/waveform.h"
#include "voxanon/base/errors.h"
#include "voxanon/base/hash.h"
#include "voxanon/base/text.h"
#include "voxanon/embedding/embedding-anon.h"
#include "voxanon/eval/det.h"
#include "voxanon/eval/similarity.h"
#include "voxanon/eval/table-io.h"
#include "voxanon/eval/wer.h"
#include "voxanon/harness/manifest.h"
#include "voxanon/harness/pipeline.h"
#include "voxanon/harness/ranking.h"
#include "voxanon/mcadams/corpus.h"
#include "voxanon/pitch/pitch.h"

namespace {

using namespace voxanon;

// VOXANON_SEED, when set, overrides any --seed or config seed.
uint64_t EffectiveSeed(uint64_t requested) {
  if (std::optional<uint64_t> env = SeedFromEnvironment()) return *env;
  return requested;
}

void Emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else WriteTextFile(out_path, text);
}

struct AnonymizeArgs {
  std::string manifest, out_dir, level = "speaker", alpha_report;
  McAdamsConfig mc;
  unsigned threads = 0;
};

int RunAnonymize(AnonymizeArgs a) {
  a.mc.seed = EffectiveSeed(a.mc.seed);
  a.mc.Check();
  Manifest manifest = LoadManifest(a.manifest);
  std::filesystem::create_directories(a.out_dir);
  CorpusReport report = AnonymizeCorpus(manifest, ParseAnonLevel(a.level), a.mc, a.out_dir, a.threads);
  WriteAlphaReport(report, a.alpha_report.empty()
                               ? std::filesystem::path(a.out_dir) / "alphas.tsv"
                               : std::filesystem::path(a.alpha_report));
  std::fprintf(stderr, "anonymized %zu of %zu utterances\n", report.assignments.size(),
               manifest.records.size());
  for (const UtteranceFailure &f : report.failures)
    std::fprintf(stderr, "FAILED %s: %s\n", f.utt_id.c_str(), f.message.c_str());
  return report.failures.empty() ? 0 : 3;
}

struct AnonEmbedArgs {
  std::string pool, sources, scores, out;
  std::size_t n = 200, n_star = 100;
  uint64_t seed = 0;
};

int RunAnonEmbed(const AnonEmbedArgs &a) {
  EmbeddingPool pool(ReadEmbeddings(a.pool));
  DistanceSpec dist = CosineDistance{};
  if (!a.scores.empty()) dist = PrecomputedScores{ReadAffinities(a.scores)};
  const uint64_t seed = EffectiveSeed(a.seed);
  std::vector<Embedding> out;
  for (const Embedding &src : ReadEmbeddings(a.sources))
    out.push_back({src.id, AnonymizeEmbedding(src, pool, dist, a.n, a.n_star, seed, src.id)});
  WriteEmbeddings(out, a.out);
  return 0;
}

struct EvalArgs {
  std::string trials, scores, ref, hyp, pitch_orig, pitch_anon, manifest, anon_dir, orig, anon,
      config, out_dir, out;
};

int RunEvalEer(const EvalArgs &a) {
  DetCurve det = ComputeDet(ReadScores(a.scores), ReadTrials(a.trials));
  std::printf("EER %s%%\n", FormatFixed(100.0 * ComputeEer(det), 4).c_str());
  return 0;
}

int RunEvalWer(const EvalArgs &a) {
  WerResult w = ComputeCorpusWer(ReadTranscripts(a.ref), ReadTranscripts(a.hyp));
  std::printf("WER %s%% [ %zu / %zu, %zu ins, %zu del, %zu sub ]\n",
              FormatFixed(100.0 * w.wer, 2).c_str(), w.errors(), w.n_ref, w.n_ins, w.n_del,
              w.n_sub);
  return 0;
}

int RunEvalRho(const EvalArgs &a) {
  PitchConfig cfg;
  DatasetRho rho;
  if (!a.pitch_orig.empty() && !a.pitch_anon.empty()) {
    std::map<std::string, PitchTrack> orig = ReadPitchTracks(a.pitch_orig);
    std::map<std::string, PitchTrack> anon = ReadPitchTracks(a.pitch_anon);
    std::vector<std::pair<PitchTrack, PitchTrack>> pairs;
    for (auto &[utt, t] : orig) {
      auto it = anon.find(utt);
      if (it == anon.end()) throw DataError("no anonymized pitch track for '" + utt + "'");
      pairs.emplace_back(std::move(t), std::move(it->second));
    }
    rho = ComputeDatasetRho(pairs, cfg);
  } else if (!a.manifest.empty() && !a.anon_dir.empty()) {
    Manifest manifest = LoadManifest(a.manifest);
    std::vector<std::pair<Waveform, Waveform>> pairs;
    for (const ManifestRecord &rec : manifest.records)
      pairs.emplace_back(ReadWav(manifest.Resolve(rec)), ReadWav(AnonymizedPath(rec, a.anon_dir)));
    rho = ComputeDatasetRho(pairs, cfg);
  } else {
    throw ArgumentError("eval rho needs --pitch-orig/--pitch-anon or --manifest/--anon-dir");
  }
  std::printf("rho_F0 %s (%zu defined, %zu undefined) gate %s\n",
              FormatFixed(rho.rho, 4).c_str(), rho.num_defined, rho.num_undefined,
              RhoPasses(rho.rho) ? "pass" : "fail");
  return 0;
}

int RunEvalGvd(const EvalArgs &a) {
  SegmentScores orig = ReadSegmentScores(a.orig);
  SegmentScores anon = ReadSegmentScores(a.anon);
  std::vector<std::string> speakers = orig.Speakers();
  SimilarityMatrix mo = ComputeSimilarityMatrix(orig, speakers);
  SimilarityMatrix ma = ComputeSimilarityMatrix(anon, speakers);
  std::printf("D_diag orig %s anon %s G_VD %s dB\n", FormatFixed(DiagonalDominance(mo), 4).c_str(),
              FormatFixed(DiagonalDominance(ma), 4).c_str(),
              FormatFixed(GainOfVoiceDistinctiveness(mo, ma), 4).c_str());
  return 0;
}

int RunEvalAll(const EvalArgs &a) {
  PipelineConfig cfg = LoadPipelineConfig(a.config);
  cfg.seed = EffectiveSeed(cfg.seed);
  PipelineResult result = RunPipeline(cfg);
  WritePipelineOutputs(result, a.out_dir);
  std::cout << ResultsSummaryText(result);
  return ExitCodeFor(result.status);
}

int RunRank(const std::vector<std::string> &summaries, const std::string &out) {
  std::vector<SubmissionReport> reports;
  for (const std::string &p : summaries) reports.push_back(ReadSummaryCsv(p));
  Emit(RankingCsv(reports, RankSystems(reports)), out);
  return 0;
}

int RunDetExport(const EvalArgs &a) {
  Emit(DetToCsv(ComputeDet(ReadScores(a.scores), ReadTrials(a.trials))), a.out);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"voxanon: speaker anonymization baselines and evaluation"};
  app.require_subcommand(1);
  std::function<int()> action;

  AnonymizeArgs an;
  CLI::App *anonymize = app.add_subcommand("anonymize", "McAdams anonymization of a manifest");
  anonymize->add_option("--manifest", an.manifest, "6-column TSV manifest")->required();
  anonymize->add_option("--out-dir", an.out_dir, "output directory")->required();
  anonymize->add_option("--level", an.level, "speaker|utterance")->capture_default_str();
  anonymize->add_option("--alpha-min", an.mc.alpha_min)->capture_default_str();
  anonymize->add_option("--alpha-max", an.mc.alpha_max)->capture_default_str();
  anonymize->add_option("--lpc-order", an.mc.lpc_order)->capture_default_str();
  anonymize->add_option("--frame-ms", an.mc.frame_ms)->capture_default_str();
  anonymize->add_option("--hop-ms", an.mc.hop_ms)->capture_default_str();
  anonymize->add_option("--seed", an.mc.seed, "overridden by VOXANON_SEED")->capture_default_str();
  anonymize->add_option("--threads", an.threads, "0 = hardware concurrency");
  anonymize->add_option("--alpha-report", an.alpha_report, "default <out-dir>/alphas.tsv");
  anonymize->callback([&] { action = [&] { return RunAnonymize(an); }; });

  AnonEmbedArgs ae;
  CLI::App *embed = app.add_subcommand("anon-embed", "pool-based x-vector anonymization");
  embed->add_option("--pool", ae.pool, "id<TAB>vector file")->required();
  embed->add_option("--sources", ae.sources, "id<TAB>vector file")->required();
  embed->add_option("--scores", ae.scores, "source<TAB>pool<TAB>affinity (default: cosine)");
  embed->add_option("--n", ae.n, "farthest candidates")->capture_default_str();
  embed->add_option("--n-star", ae.n_star, "averaged subset size")->capture_default_str();
  embed->add_option("--seed", ae.seed, "overridden by VOXANON_SEED")->capture_default_str();
  embed->add_option("--out", ae.out)->required();
  embed->callback([&] { action = [&] { return RunAnonEmbed(ae); }; });

  EvalArgs ev;
  CLI::App *eval = app.add_subcommand("eval", "evaluation metrics");
  eval->require_subcommand(1);
  CLI::App *eer = eval->add_subcommand("eer", "equal error rate");
  eer->add_option("--trials", ev.trials)->required();
  eer->add_option("--scores", ev.scores)->required();
  eer->callback([&] { action = [&] { return RunEvalEer(ev); }; });
  CLI::App *wer = eval->add_subcommand("wer", "word error rate");
  wer->add_option("--ref", ev.ref)->required();
  wer->add_option("--hyp", ev.hyp)->required();
  wer->callback([&] { action = [&] { return RunEvalWer(ev); }; });
  CLI::App *rho = eval->add_subcommand("rho", "pitch correlation");
  rho->add_option("--pitch-orig", ev.pitch_orig);
  rho->add_option("--pitch-anon", ev.pitch_anon);
  rho->add_option("--manifest", ev.manifest);
  rho->add_option("--anon-dir", ev.anon_dir);
  rho->callback([&] { action = [&] { return RunEvalRho(ev); }; });
  CLI::App *gvd = eval->add_subcommand("gvd", "gain of voice distinctiveness");
  gvd->add_option("--orig", ev.orig, "segment scores, original")->required();
  gvd->add_option("--anon", ev.anon, "segment scores, anonymized")->required();
  gvd->callback([&] { action = [&] { return RunEvalGvd(ev); }; });
  CLI::App *all = eval->add_subcommand("all", "full pipeline from a JSON config");
  all->add_option("--config", ev.config)->required();
  all->add_option("--out-dir", ev.out_dir)->required();
  all->callback([&] { action = [&] { return RunEvalAll(ev); }; });

  std::vector<std::string> summaries;
  std::string rank_out;
  CLI::App *rank = app.add_subcommand("rank", "rank systems from summary CSVs");
  rank->add_option("summaries", summaries, "summary.csv files")->required();
  rank->add_option("--out", rank_out, "default stdout");
  rank->callback([&] { action = [&] { return RunRank(summaries, rank_out); }; });

  CLI::App *det = app.add_subcommand("det-export", "DET curve as CSV");
  det->add_option("--trials", ev.trials)->required();
  det->add_option("--scores", ev.scores)->required();
  det->add_option("--out", ev.out, "default stdout");
  det->callback([&] { action = [&] { return RunDetExport(ev); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const std::exception &e) {
    std::fprintf(stderr, "voxanon: %s\n", e.what());
    return 1;
  }
}
