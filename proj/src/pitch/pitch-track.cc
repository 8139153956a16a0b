// pitch/pitch-track.cc

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

#include <cmath>
#include <fstream>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"
#include "voxanon/pitch/pitch.h"

namespace voxanon {

void PitchConfig::Check() const {
  if (!(f0_min_hz > 0.0) || !(f0_min_hz < f0_max_hz))
    throw ArgumentError("PitchConfig: need 0 < f0_min < f0_max");
  if (!(frame_ms > 0.0) || !(hop_ms > 0.0))
    throw ArgumentError("PitchConfig: frame and hop must be positive");
  if (!(voicing_threshold > 0.0 && voicing_threshold < 1.0))
    throw ArgumentError("PitchConfig: voicing_threshold must lie in (0, 1)");
  if (max_lag_frames < 0) throw ArgumentError("PitchConfig: max_lag_frames must be >= 0");
}

std::size_t PitchTrack::NumVoiced() const {
  std::size_t n = 0;
  for (uint8_t v : voiced) n += v ? 1 : 0;
  return n;
}

PitchTrack PitchTrack::FromF0(std::vector<double> f0, double hop_seconds) {
  PitchTrack t;
  t.hop_seconds = hop_seconds;
  t.voiced.resize(f0.size());
  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (!std::isfinite(f0[i]) || f0[i] < 0.0)
      throw ArgumentError("PitchTrack: invalid f0 at frame " + std::to_string(i));
    t.voiced[i] = f0[i] > 0.0;
  }
  t.f0_hz = std::move(f0);
  return t;
}

void PitchTrack::Validate() const {
  if (f0_hz.size() != voiced.size()) throw ArgumentError("PitchTrack: length mismatch");
  if (!(hop_seconds > 0.0)) throw ArgumentError("PitchTrack: hop must be positive");
  for (std::size_t i = 0; i < f0_hz.size(); ++i) {
    bool ok = voiced[i] ? (std::isfinite(f0_hz[i]) && f0_hz[i] > 0.0) : f0_hz[i] == 0.0;
    if (!ok) throw ArgumentError("PitchTrack: inconsistent frame " + std::to_string(i));
  }
}

PitchTrack InterpolateTrack(const PitchTrack &track, std::size_t target_len) {
  const std::size_t n = track.size();
  if (target_len == n) return track;
  if (target_len < n)
    throw ArgumentError("InterpolateTrack: target length " + std::to_string(target_len) +
                        " is shorter than the track (" + std::to_string(n) + ")");
  if (n < 2) throw ArgumentError("InterpolateTrack: need at least 2 frames to stretch");

  PitchTrack out;
  out.hop_seconds = track.hop_seconds * static_cast<double>(n - 1) /
                    static_cast<double>(target_len - 1);
  out.f0_hz.resize(target_len);
  out.voiced.resize(target_len);
  const std::size_t span = target_len - 1;
  for (std::size_t j = 0; j < target_len; ++j) {
    // Integer arithmetic keeps the endpoints and exact grid hits exact.
    const std::size_t num = j * (n - 1);
    const std::size_t lo = num / span;
    const std::size_t rem = num % span;
    if (rem == 0) {
      out.f0_hz[j] = track.f0_hz[lo];
      out.voiced[j] = track.voiced[lo];
      continue;
    }
    const std::size_t hi = lo + 1;
    const bool voiced = track.voiced[lo] && track.voiced[hi];
    out.voiced[j] = voiced;
    if (voiced) {
      const double frac = static_cast<double>(rem) / static_cast<double>(span);
      out.f0_hz[j] = track.f0_hz[lo] + frac * (track.f0_hz[hi] - track.f0_hz[lo]);
    } else {
      out.f0_hz[j] = 0.0;
    }
  }
  return out;
}

std::map<std::string, PitchTrack> ReadPitchTracks(const std::filesystem::path &path) {
  std::map<std::string, PitchTrack> tracks;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() != 3)
      throw ParseError(path.string(), line_no, "expected utt_id<TAB>hop<TAB>f0 values");
    try {
      double hop = ParseDouble(cols[1]);
      if (!(hop > 0.0)) throw FormatError("hop must be positive");
      std::vector<double> f0;
      for (const std::string &tok : SplitWhitespace(cols[2])) f0.push_back(ParseDouble(tok));
      PitchTrack t = PitchTrack::FromF0(std::move(f0), hop);
      if (!tracks.emplace(cols[0], std::move(t)).second)
        throw FormatError("duplicate utterance '" + cols[0] + "'");
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  });
  return tracks;
}

void WritePitchTracks(const std::map<std::string, PitchTrack> &tracks,
                      const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto &[utt, t] : tracks) {
    out << utt << '\t' << FormatDouble(t.hop_seconds) << '\t';
    for (std::size_t i = 0; i < t.size(); ++i)
      out << (i ? " " : "") << (t.voiced[i] ? FormatDouble(t.f0_hz[i]) : std::string("0"));
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace voxanon
