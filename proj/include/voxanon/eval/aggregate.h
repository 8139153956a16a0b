// voxanon/eval/aggregate.h

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

#ifndef VOXANON_EVAL_AGGREGATE_H_
#define VOXANON_EVAL_AGGREGATE_H_

#include <map>
#include <string>
#include <vector>

namespace voxanon {

using DatasetValues = std::map<std::string, double>;
using WeightProfile = std::map<std::string, double>;

/// sum_d weight[d] * value[d].  The key sets must match exactly and the
/// weights must sum to 1 within 1e-9; either violation raises ConfigError.
double WeightedAverage(const DatasetValues &values, const WeightProfile &weights);

/// Weighted EER across evaluation subsets (same contract as WeightedAverage).
inline double WeightedAverageEer(const DatasetValues &eers, const WeightProfile &weights) {
  return WeightedAverage(eers, weights);
}

/// Unweighted mean; ArgumentError on an empty map.
double AverageWer(const DatasetValues &wers);

/**
   Built-in weight profiles:

     "subset"  librispeech 0.5, vctk_common 0.1, vctk_different 0.4
     "gender"  librispeech_f/_m 0.25 each, vctk_different_f/_m 0.20 each,
               vctk_common_f/_m 0.05 each

   Unknown names raise ConfigError.
*/
WeightProfile NamedWeightProfile(const std::string &name);
std::vector<std::string> WeightProfileNames();

}  // namespace voxanon

#endif  // VOXANON_EVAL_AGGREGATE_H_
