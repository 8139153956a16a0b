// eval/aggregate.cc

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

#include "voxanon/eval/aggregate.h"

#include <cmath>

#include "voxanon/base/errors.h"

namespace voxanon {

double WeightedAverage(const DatasetValues &values, const WeightProfile &weights) {
  if (values.size() != weights.size())
    throw ConfigError("weighted average: " + std::to_string(values.size()) + " values but " +
                      std::to_string(weights.size()) + " weights");
  double weight_sum = 0.0, total = 0.0;
  auto v = values.begin();
  for (auto w = weights.begin(); w != weights.end(); ++w, ++v) {
    if (v->first != w->first)
      throw ConfigError("weighted average: dataset '" + v->first + "' has no weight (or '" +
                        w->first + "' has no value)");
    weight_sum += w->second;
    total += w->second * v->second;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9)
    throw ConfigError("weights sum to " + std::to_string(weight_sum) + ", expected 1");
  return total;
}

double AverageWer(const DatasetValues &wers) {
  if (wers.empty()) throw ArgumentError("AverageWer: no datasets");
  double sum = 0.0;
  for (const auto &[name, wer] : wers) sum += wer;
  return sum / static_cast<double>(wers.size());
}

WeightProfile NamedWeightProfile(const std::string &name) {
  if (name == "subset")
    return {{"librispeech", 0.5}, {"vctk_common", 0.1}, {"vctk_different", 0.4}};
  if (name == "gender")
    return {{"librispeech_f", 0.25},    {"librispeech_m", 0.25},
            {"vctk_different_f", 0.20}, {"vctk_different_m", 0.20},
            {"vctk_common_f", 0.05},    {"vctk_common_m", 0.05}};
  throw ConfigError("unknown weight profile '" + name + "'");
}

std::vector<std::string> WeightProfileNames() { return {"gender", "subset"}; }

}  // namespace voxanon
