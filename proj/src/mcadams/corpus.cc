// mcadams/corpus.cc

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

#include "voxanon/mcadams/corpus.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <optional>
#include <thread>

#include "voxanon/base/errors.h"

namespace voxanon {

AnonLevel ParseAnonLevel(const std::string &name) {
  if (name == "speaker" || name == "speaker-level") return AnonLevel::kSpeakerLevel;
  if (name == "utterance" || name == "utterance-level") return AnonLevel::kUtteranceLevel;
  throw ArgumentError("unknown anonymization level '" + name + "' (speaker|utterance)");
}

std::string AlphaKey(const ManifestRecord &rec, AnonLevel level) {
  if (level == AnonLevel::kUtteranceLevel) return "utt/" + rec.utt_id;
  return "spk/" + std::string(ToString(rec.role)) + "/" + rec.speaker_id;
}

std::filesystem::path AnonymizedPath(const ManifestRecord &rec,
                                     const std::filesystem::path &out_dir) {
  // Relative paths keep their layout unless they climb out of out_dir.
  const std::filesystem::path rel = rec.audio_path.lexically_normal();
  if (rec.audio_path.is_relative() && !rel.empty() && *rel.begin() != "..")
    return out_dir / rel;
  return out_dir / rec.audio_path.filename();
}

CorpusReport AnonymizeCorpus(const Manifest &manifest, AnonLevel level,
                             const McAdamsConfig &cfg,
                             const std::filesystem::path &out_dir, unsigned num_threads) {
  cfg.Check();
  const std::size_t n = manifest.records.size();
  CorpusReport report;
  report.assignments.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ManifestRecord &rec = manifest.records[i];
    report.assignments[i] = {rec.utt_id, rec.speaker_id, SampleAlpha(AlphaKey(rec, level), cfg)};
  }

  std::vector<std::optional<std::string>> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      const ManifestRecord &rec = manifest.records[i];
      try {
        Waveform in = ReadWav(manifest.Resolve(rec));
        Waveform out = AnonymizeUtterance(in, report.assignments[i].alpha, cfg);
        std::filesystem::path dest = AnonymizedPath(rec, out_dir);
        std::filesystem::create_directories(dest.parent_path());
        WriteWav(out, dest);
      } catch (const std::exception &e) {
        errors[i] = e.what();
      }
    }
  };

  if (num_threads == 0) num_threads = std::max(1u, std::thread::hardware_concurrency());
  num_threads = static_cast<unsigned>(std::min<std::size_t>(num_threads, std::max<std::size_t>(n, 1)));
  std::filesystem::create_directories(out_dir);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < num_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::size_t i = 0; i < n; ++i)
    if (errors[i]) report.failures.push_back({manifest.records[i].utt_id, *errors[i]});
  return report;
}

void WriteAlphaReport(const CorpusReport &report, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  char buf[64];
  for (const AlphaAssignment &a : report.assignments) {
    std::snprintf(buf, sizeof(buf), "%.17g", a.alpha);
    out << a.utt_id << '\t' << a.speaker_id << '\t' << buf << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace voxanon
