// pitch/pitch-estimator.cc

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

#include <algorithm>
#include <cmath>
#include <span>

#include "voxanon/base/errors.h"
#include "voxanon/pitch/pitch.h"
#include "voxanon/simd/kernels.h"

namespace voxanon {

namespace {

// Candidate peaks within this fraction of the global maximum compete; the
// shortest period among them wins, which suppresses octave-down errors.
constexpr double kPeakRatio = 0.9;

}  // namespace

PitchTrack EstimatePitch(const Waveform &wave, const PitchConfig &cfg) {
  cfg.Check();
  wave.Validate();
  const double fs = wave.sample_rate_hz;
  if (fs < 2.0 * cfg.f0_max_hz)
    throw ArgumentError("EstimatePitch: sample rate below 2 * f0_max");
  const auto frame_len = static_cast<std::size_t>(std::floor(cfg.frame_ms * 1e-3 * fs));
  const auto hop = static_cast<std::size_t>(std::floor(cfg.hop_ms * 1e-3 * fs));
  if (frame_len < 2 || hop == 0) throw ArgumentError("EstimatePitch: frame or hop too short");

  PitchTrack track;
  track.hop_seconds = static_cast<double>(hop) / fs;
  const std::size_t len = wave.size();
  if (len < frame_len) return track;

  const auto lag_min = std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(fs / cfg.f0_max_hz)));
  const auto lag_max = std::max(lag_min, static_cast<std::size_t>(std::ceil(fs / cfg.f0_min_hz)));
  const std::size_t seg_len = frame_len + lag_max + 1;
  const double floor_ms = std::pow(10.0, cfg.energy_floor_db / 10.0);

  const std::size_t num_frames = (len - frame_len) / hop + 1;
  track.f0_hz.assign(num_frames, 0.0);
  track.voiced.assign(num_frames, 0);

  std::vector<double> seg(seg_len), cum_sq(seg_len + 1), ncc(lag_max + 2, 0.0);
  for (std::size_t k = 0; k < num_frames; ++k) {
    const std::size_t start = k * hop;
    const std::size_t avail = std::min(seg_len, len - start);
    std::fill(seg.begin(), seg.end(), 0.0);
    std::copy_n(wave.samples.begin() + static_cast<std::ptrdiff_t>(start), avail, seg.begin());
    double mean = 0.0;
    for (std::size_t i = 0; i < frame_len; ++i) mean += seg[i];
    mean /= static_cast<double>(frame_len);
    for (std::size_t i = 0; i < avail; ++i) seg[i] -= mean;

    cum_sq[0] = 0.0;
    for (std::size_t i = 0; i < seg_len; ++i) cum_sq[i + 1] = cum_sq[i] + seg[i] * seg[i];
    const double e0 = cum_sq[frame_len];
    if (!(e0 / static_cast<double>(frame_len) >= floor_ms) || e0 <= 0.0) continue;

    std::span<const double> head(seg.data(), frame_len);
    for (std::size_t lag = lag_min - 1; lag <= lag_max + 1; ++lag) {
      const double e_lag = cum_sq[lag + frame_len] - cum_sq[lag];
      const double denom = std::sqrt(e0 * e_lag);
      ncc[lag] = denom > 0.0
                     ? simd::Dot(head, std::span<const double>(seg.data() + lag, frame_len)) / denom
                     : 0.0;
    }

    std::size_t best = lag_min;
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag)
      if (ncc[lag] > ncc[best]) best = lag;
    const double global = ncc[best];
    if (!(global >= cfg.voicing_threshold)) continue;
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      if (ncc[lag] >= kPeakRatio * global && ncc[lag] >= ncc[lag - 1] && ncc[lag] >= ncc[lag + 1]) {
        best = lag;
        break;
      }
    }
    if (!(ncc[best] >= cfg.voicing_threshold)) continue;

    double offset = 0.0;
    const double curvature = ncc[best - 1] - 2.0 * ncc[best] + ncc[best + 1];
    if (curvature < 0.0)
      offset = std::clamp(0.5 * (ncc[best - 1] - ncc[best + 1]) / curvature, -0.5, 0.5);
    const double f0 = fs / (static_cast<double>(best) + offset);
    track.f0_hz[k] = std::clamp(f0, cfg.f0_min_hz, cfg.f0_max_hz);
    track.voiced[k] = 1;
  }
  return track;
}

}  // namespace voxanon
