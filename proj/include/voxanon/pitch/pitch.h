// voxanon/pitch/pitch.h

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

#ifndef VOXANON_PITCH_PITCH_H_
#define VOXANON_PITCH_PITCH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voxanon/audio/waveform.h"

namespace voxanon {

struct PitchConfig {
  double f0_min_hz = 60.0;
  double f0_max_hz = 400.0;
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  /// Minimum normalized cross-correlation peak for a voiced decision.
  double voicing_threshold = 0.45;
  /// Frames whose mean-square level is below this (dBFS) are unvoiced.
  double energy_floor_db = -60.0;
  /// Lag search window for the correlation, in frames (either direction).
  int max_lag_frames = 10;

  void Check() const;
};

/// Per-frame F0 with voicing flags; unvoiced frames carry f0 = 0.
struct PitchTrack {
  std::vector<double> f0_hz;
  std::vector<uint8_t> voiced;
  double hop_seconds = 0.01;

  std::size_t size() const { return f0_hz.size(); }
  std::size_t NumVoiced() const;
  /// Builds a track from raw values: f0 > 0 is voiced, f0 == 0 unvoiced.
  static PitchTrack FromF0(std::vector<double> f0_hz, double hop_seconds);
  /// Equal lengths, unvoiced => f0 == 0, voiced => f0 > 0 and finite.
  void Validate() const;
};

/**
   Normalized cross-correlation pitch estimator.

   For every 25 ms frame (10 ms hop) the frame is correlated against copies
   of the signal delayed by each lag in [fs/f0_max, fs/f0_min]; the lag of
   the shortest-period peak within 10% of the global maximum is refined by
   parabolic interpolation.  A frame is voiced when that peak reaches
   voicing_threshold and its level is above energy_floor_db.  No smoothing
   or interpolation across unvoiced frames is applied.

   Requires sample_rate_hz >= 2 * f0_max_hz (ArgumentError otherwise); a
   waveform shorter than one frame gives an empty track.
*/
PitchTrack EstimatePitch(const Waveform &wave, const PitchConfig &cfg);

/**
   Stretches a track to `target_len` frames by uniform index remapping:
   output frame j sits at source position j (n - 1) / (target_len - 1).
   F0 is linearly interpolated between the two bracketing frames and a
   frame is voiced only if both bracketing frames are voiced.  Endpoints
   are reproduced exactly.  Requires target_len >= size() >= 2 when
   stretching; target_len == size() returns the track unchanged.
*/
PitchTrack InterpolateTrack(const PitchTrack &track, std::size_t target_len);

struct PitchCorrelation {
  /// Best Pearson correlation over the lag window; nullopt when undefined.
  std::optional<double> rho;
  /// Lag achieving it: original frame i is paired with anonymized frame i + lag.
  int lag = 0;
};

/// Pearson correlation between two tracks over jointly voiced frames at a
/// fixed lag (same convention as PitchCorrelation::lag).  Undefined when
/// fewer than two frames are jointly voiced or either side is constant.
std::optional<double> PearsonAtLag(const PitchTrack &orig, const PitchTrack &anon, int lag);

/// Interpolates the shorter track to the longer one's length and maximizes
/// PearsonAtLag over lags in [-max_lag_frames, max_lag_frames].  Ties keep
/// the lag of smallest magnitude (negative first).
PitchCorrelation ComputePitchCorrelation(const PitchTrack &orig, const PitchTrack &anon,
                                         const PitchConfig &cfg);

struct DatasetRho {
  double rho = 0.0;            // mean over defined pairs
  std::size_t num_defined = 0;
  std::size_t num_undefined = 0;
};

/// Mean of the defined correlations; MetricUndefinedError if none is
/// defined, ArgumentError on an empty list.
DatasetRho AverageRho(const std::vector<std::optional<double>> &per_utterance);

DatasetRho ComputeDatasetRho(const std::vector<std::pair<PitchTrack, PitchTrack>> &pairs,
                             const PitchConfig &cfg);
DatasetRho ComputeDatasetRho(const std::vector<std::pair<Waveform, Waveform>> &pairs,
                             const PitchConfig &cfg);

/// Validity gate: passes iff rho > 0.3 (strict).
constexpr double kRhoThreshold = 0.3;
inline bool RhoPasses(double rho) { return rho > kRhoThreshold; }
std::map<std::string, bool> RhoGate(const std::map<std::string, double> &rho_by_dataset);

/// Reads `utt_id<TAB>hop_seconds<TAB>f0_1 f0_2 ...` lines (0 = unvoiced).
std::map<std::string, PitchTrack> ReadPitchTracks(const std::filesystem::path &path);
void WritePitchTracks(const std::map<std::string, PitchTrack> &tracks,
                      const std::filesystem::path &path);

}  // namespace voxanon

#endif  // VOXANON_PITCH_PITCH_H_
