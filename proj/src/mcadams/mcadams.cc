// mcadams/mcadams.cc

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

#include "voxanon/mcadams/mcadams.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "voxanon/base/errors.h"
#include "voxanon/base/hash.h"
#include "voxanon/mcadams/lpc.h"
#include "voxanon/mcadams/poles.h"

namespace voxanon {

void McAdamsConfig::Check() const {
  if (!(alpha_min > 0.0) || !(alpha_min <= alpha_max) || !std::isfinite(alpha_max))
    throw ArgumentError("McAdamsConfig: need 0 < alpha_min <= alpha_max");
  if (lpc_order <= 0) throw ArgumentError("McAdamsConfig: lpc_order must be positive");
  if (!(stability_margin > 0.0 && stability_margin < 1.0))
    throw ArgumentError("McAdamsConfig: stability_margin must lie in (0, 1)");
  if (!(real_pole_epsilon >= 0.0))
    throw ArgumentError("McAdamsConfig: real_pole_epsilon must be non-negative");
  if (!(frame_ms > 0.0) || !(hop_ms > 0.0) || hop_ms > frame_ms)
    throw ArgumentError("McAdamsConfig: need 0 < hop_ms <= frame_ms");
}

FrameConfig McAdamsConfig::FrameConfigFor(int sample_rate_hz) const {
  return FrameConfig::FromMilliseconds(frame_ms, hop_ms, sample_rate_hz, window);
}

double SampleAlpha(std::string_view key, const McAdamsConfig &cfg) {
  cfg.Check();
  if (cfg.alpha_min == cfg.alpha_max) return cfg.alpha_min;
  const double u = UnitInterval(KeyedHash(cfg.seed, key));
  const double alpha = cfg.alpha_min + u * (cfg.alpha_max - cfg.alpha_min);
  // Rounding could land exactly on alpha_max; keep the interval half-open.
  return alpha < cfg.alpha_max ? alpha : std::nextafter(cfg.alpha_max, cfg.alpha_min);
}

Waveform AnonymizeUtterance(const Waveform &wave, double alpha, const McAdamsConfig &cfg) {
  cfg.Check();
  wave.Validate();
  if (!(alpha > 0.0)) throw ArgumentError("AnonymizeUtterance: alpha must be positive");
  Waveform out;
  out.sample_rate_hz = wave.sample_rate_hz;
  if (wave.samples.empty()) return out;

  const FrameConfig fc = cfg.FrameConfigFor(wave.sample_rate_hz);
  if (static_cast<std::size_t>(cfg.lpc_order) >= fc.frame_len_samples)
    throw ArgumentError("AnonymizeUtterance: lpc_order must be below the frame length (" +
                        std::to_string(fc.frame_len_samples) + " samples)");

  const std::size_t pad = fc.frame_len_samples - fc.hop_samples;
  Waveform padded;
  padded.sample_rate_hz = wave.sample_rate_hz;
  padded.samples.assign(wave.size() + 2 * pad, 0.0);
  std::copy(wave.samples.begin(), wave.samples.end(),
            padded.samples.begin() + static_cast<std::ptrdiff_t>(pad));

  FrameMatrix frames = FrameSignal(padded, fc);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    try {
      LpcFrame lpc = LpcAnalyze(frames[k], cfg.lpc_order);
      if (lpc.degenerate) continue;
      PoleSet shifted = McAdamsShift(FindPoles(lpc), alpha, cfg.real_pole_epsilon);
      std::vector<double> coeffs = PolesToCoeffs(shifted, cfg.stability_margin);
      frames[k] = SynthesizeFrame(lpc.residual, coeffs);
    } catch (const NumericalError &e) {
      throw NumericalError("frame " + std::to_string(k) + ": " + e.what());
    }
  }

  Waveform ola = OverlapAdd(frames, fc, padded.size(), wave.sample_rate_hz);
  out.samples.assign(ola.samples.begin() + static_cast<std::ptrdiff_t>(pad),
                     ola.samples.begin() + static_cast<std::ptrdiff_t>(pad + wave.size()));
  double peak = 0.0;
  for (double x : out.samples) peak = std::max(peak, std::abs(x));
  if (peak > 1.0)
    for (double &x : out.samples) x /= peak;
  return out;
}

}  // namespace voxanon
