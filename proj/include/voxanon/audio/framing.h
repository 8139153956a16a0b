// voxanon/audio/framing.h

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

#ifndef VOXANON_AUDIO_FRAMING_H_
#define VOXANON_AUDIO_FRAMING_H_

#include <cstddef>
#include <vector>

#include "voxanon/audio/waveform.h"

namespace voxanon {

enum class WindowType { kRectangular, kHann };

struct FrameConfig {
  std::size_t frame_len_samples = 320;
  std::size_t hop_samples = 160;
  WindowType window = WindowType::kHann;

  /// Requires 0 < hop <= frame_len.
  void Check() const;

  /// Frame and hop given in milliseconds, rounded down to whole samples.
  static FrameConfig FromMilliseconds(double frame_ms, double hop_ms,
                                      int sample_rate_hz, WindowType window);
};

/// Periodic window of length n; the periodic Hann sums to exactly 1 at
/// 50% overlap.
std::vector<double> MakeWindow(WindowType type, std::size_t n);

/// ceil(max(len - frame_len, 0) / hop) + 1, or 0 for an empty signal.
std::size_t NumFrames(std::size_t num_samples, const FrameConfig &cfg);

using FrameMatrix = std::vector<std::vector<double>>;

/// Frame k starts at k * hop; the tail is zero-padded so every sample is
/// covered.  The analysis window is applied to each frame.
FrameMatrix FrameSignal(const Waveform &wave, const FrameConfig &cfg);

/// Sums frames at hop spacing and divides each output sample by the summed
/// analysis-window envelope wherever that exceeds 1e-8 (other samples pass
/// through undivided).  Output is truncated to `original_len`.
Waveform OverlapAdd(const FrameMatrix &frames, const FrameConfig &cfg,
                    std::size_t original_len, int sample_rate_hz = 16000);

}  // namespace voxanon

#endif  // VOXANON_AUDIO_FRAMING_H_
