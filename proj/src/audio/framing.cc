// audio/framing.cc

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

#include "voxanon/audio/framing.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "voxanon/base/errors.h"
#include "voxanon/simd/kernels.h"

namespace voxanon {

namespace {
constexpr double kEnvelopeFloor = 1e-8;
}

void FrameConfig::Check() const {
  if (frame_len_samples == 0 || hop_samples == 0 || hop_samples > frame_len_samples)
    throw ArgumentError("FrameConfig: need 0 < hop (" + std::to_string(hop_samples) +
                        ") <= frame_len (" + std::to_string(frame_len_samples) + ")");
}

FrameConfig FrameConfig::FromMilliseconds(double frame_ms, double hop_ms,
                                          int sample_rate_hz, WindowType window) {
  if (sample_rate_hz <= 0 || frame_ms <= 0.0 || hop_ms <= 0.0)
    throw ArgumentError("FrameConfig: frame, hop and rate must be positive");
  FrameConfig cfg;
  cfg.frame_len_samples = static_cast<std::size_t>(std::floor(frame_ms * 1e-3 * sample_rate_hz));
  cfg.hop_samples = static_cast<std::size_t>(std::floor(hop_ms * 1e-3 * sample_rate_hz));
  cfg.window = window;
  cfg.Check();
  return cfg;
}

std::vector<double> MakeWindow(WindowType type, std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (type == WindowType::kHann) {
    for (std::size_t i = 0; i < n; ++i)
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
  }
  return w;
}

std::size_t NumFrames(std::size_t num_samples, const FrameConfig &cfg) {
  cfg.Check();
  if (num_samples == 0) return 0;
  if (num_samples <= cfg.frame_len_samples) return 1;
  std::size_t excess = num_samples - cfg.frame_len_samples;
  return (excess + cfg.hop_samples - 1) / cfg.hop_samples + 1;
}

FrameMatrix FrameSignal(const Waveform &wave, const FrameConfig &cfg) {
  const std::size_t num_frames = NumFrames(wave.size(), cfg);
  const std::size_t len = cfg.frame_len_samples;
  const std::vector<double> window = MakeWindow(cfg.window, len);
  FrameMatrix frames(num_frames, std::vector<double>(len, 0.0));
  for (std::size_t k = 0; k < num_frames; ++k) {
    const std::size_t start = k * cfg.hop_samples;
    const std::size_t avail = std::min(len, wave.size() - start);
    std::copy_n(wave.samples.begin() + static_cast<std::ptrdiff_t>(start), avail,
                frames[k].begin());
    simd::Multiply(frames[k], window, frames[k]);
  }
  return frames;
}

Waveform OverlapAdd(const FrameMatrix &frames, const FrameConfig &cfg,
                    std::size_t original_len, int sample_rate_hz) {
  cfg.Check();
  const std::size_t len = cfg.frame_len_samples;
  const std::vector<double> window = MakeWindow(cfg.window, len);
  const std::size_t total =
      std::max(original_len, frames.empty() ? 0 : (frames.size() - 1) * cfg.hop_samples + len);
  std::vector<double> sum(total, 0.0), envelope(total, 0.0);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].size() != len)
      throw ArgumentError("OverlapAdd: frame " + std::to_string(k) + " has length " +
                          std::to_string(frames[k].size()) + ", expected " +
                          std::to_string(len));
    std::span<double> sum_view(sum.data() + k * cfg.hop_samples, len);
    std::span<double> env_view(envelope.data() + k * cfg.hop_samples, len);
    simd::Accumulate(frames[k], sum_view);
    simd::Accumulate(window, env_view);
  }
  Waveform out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(original_len);
  for (std::size_t i = 0; i < original_len; ++i)
    out.samples[i] = envelope[i] > kEnvelopeFloor ? sum[i] / envelope[i] : sum[i];
  return out;
}

}  // namespace voxanon
