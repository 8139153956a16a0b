// voxanon/mcadams/mcadams.h

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

#ifndef VOXANON_MCADAMS_MCADAMS_H_
#define VOXANON_MCADAMS_MCADAMS_H_

#include <cstdint>
#include <string_view>

#include "voxanon/audio/framing.h"
#include "voxanon/audio/waveform.h"

namespace voxanon {

/**
   Settings of the LPC pole-shifting anonymizer.

   Frames are `frame_ms` long with a `hop_ms` hop and are windowed with
   `window`; each frame gets an order-`lpc_order` all-pole model whose
   complex pole angles are raised to the power alpha.  alpha is drawn from
   U[alpha_min, alpha_max) per speaker (or per utterance) through a keyed
   hash of `seed`; set alpha_min == alpha_max for a constant coefficient.
*/
struct McAdamsConfig {
  double alpha_min = 0.5;
  double alpha_max = 0.9;
  int lpc_order = 20;
  double frame_ms = 20.0;
  double hop_ms = 10.0;
  WindowType window = WindowType::kHann;
  double real_pole_epsilon = 1e-6;
  double stability_margin = 0.999;
  uint64_t seed = 0;

  /// Throws ArgumentError unless 0 < alpha_min <= alpha_max, order > 0,
  /// 0 < stability_margin < 1 and the frame/hop pair is valid.
  void Check() const;
  FrameConfig FrameConfigFor(int sample_rate_hz) const;
};

/// alpha_min + u * (alpha_max - alpha_min) with u in [0, 1) derived from a
/// stable hash of (cfg.seed, key).  Same inputs always give the same alpha.
double SampleAlpha(std::string_view key, const McAdamsConfig &cfg);

/**
   Anonymizes one utterance with a fixed McAdams coefficient.

   Pipeline per frame: window -> LPC analysis -> roots of A(z) -> phase warp
   -> back to coefficients -> residual re-filtered through the warped
   synthesis filter; frames are recombined by overlap-add.  The signal is
   padded by (frame - hop) zeros at both ends internally so every original
   sample sits under a full window envelope; the output has exactly the
   input length.  If the peak magnitude exceeds 1 the output is scaled down
   to peak 1; it is never scaled up.

   Errors from the numerical stages are rethrown as NumericalError with the
   frame index prepended.
*/
Waveform AnonymizeUtterance(const Waveform &wave, double alpha, const McAdamsConfig &cfg);

}  // namespace voxanon

#endif  // VOXANON_MCADAMS_MCADAMS_H_
