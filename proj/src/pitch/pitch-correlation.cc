// pitch/pitch-correlation.cc

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

#include "voxanon/base/errors.h"
#include "voxanon/pitch/pitch.h"

namespace voxanon {

std::optional<double> PearsonAtLag(const PitchTrack &orig, const PitchTrack &anon, int lag) {
  const auto n_orig = static_cast<long>(orig.size());
  const auto n_anon = static_cast<long>(anon.size());
  const long begin = std::max(0L, -static_cast<long>(lag));
  const long end = std::min(n_orig, n_anon - lag);
  std::vector<double> xs, ys;
  for (long i = begin; i < end; ++i) {
    if (orig.voiced[i] && anon.voiced[i + lag]) {
      xs.push_back(orig.f0_hz[i]);
      ys.push_back(anon.f0_hz[i + lag]);
    }
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

PitchCorrelation ComputePitchCorrelation(const PitchTrack &orig, const PitchTrack &anon,
                                         const PitchConfig &cfg) {
  orig.Validate();
  anon.Validate();
  PitchCorrelation result;
  if (orig.size() == 0 || anon.size() == 0) return result;
  const std::size_t target = std::max(orig.size(), anon.size());
  if (std::min(orig.size(), anon.size()) < 2 && orig.size() != anon.size()) return result;
  const PitchTrack a = InterpolateTrack(orig, target);
  const PitchTrack b = InterpolateTrack(anon, target);

  auto consider = [&](int lag) {
    std::optional<double> r = PearsonAtLag(a, b, lag);
    if (r && (!result.rho || *r > *result.rho)) {
      result.rho = r;
      result.lag = lag;
    }
  };
  consider(0);
  for (int lag = 1; lag <= cfg.max_lag_frames; ++lag) {
    consider(-lag);
    consider(lag);
  }
  return result;
}

DatasetRho AverageRho(const std::vector<std::optional<double>> &per_utterance) {
  if (per_utterance.empty()) throw ArgumentError("AverageRho: no utterance pairs");
  DatasetRho out;
  double sum = 0.0;
  for (const auto &r : per_utterance) {
    if (r) {
      sum += *r;
      ++out.num_defined;
    } else {
      ++out.num_undefined;
    }
  }
  if (out.num_defined == 0)
    throw MetricUndefinedError("pitch correlation undefined for all " +
                               std::to_string(out.num_undefined) + " utterance pairs");
  out.rho = sum / static_cast<double>(out.num_defined);
  return out;
}

DatasetRho ComputeDatasetRho(const std::vector<std::pair<PitchTrack, PitchTrack>> &pairs,
                             const PitchConfig &cfg) {
  std::vector<std::optional<double>> values;
  values.reserve(pairs.size());
  for (const auto &[orig, anon] : pairs)
    values.push_back(ComputePitchCorrelation(orig, anon, cfg).rho);
  return AverageRho(values);
}

DatasetRho ComputeDatasetRho(const std::vector<std::pair<Waveform, Waveform>> &pairs,
                             const PitchConfig &cfg) {
  std::vector<std::optional<double>> values;
  values.reserve(pairs.size());
  for (const auto &[orig, anon] : pairs)
    values.push_back(
        ComputePitchCorrelation(EstimatePitch(orig, cfg), EstimatePitch(anon, cfg), cfg).rho);
  return AverageRho(values);
}

std::map<std::string, bool> RhoGate(const std::map<std::string, double> &rho_by_dataset) {
  std::map<std::string, bool> out;
  for (const auto &[dataset, rho] : rho_by_dataset) out[dataset] = RhoPasses(rho);
  return out;
}

}  // namespace voxanon
