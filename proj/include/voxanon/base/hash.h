// voxanon/base/hash.h

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

#ifndef VOXANON_BASE_HASH_H_
#define VOXANON_BASE_HASH_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace voxanon {

// Platform-independent keyed hashing and random draws.  Everything that
// must be reproducible across machines (alpha sampling, candidate subsets)
// goes through these rather than std::hash or <random> distributions, whose
// outputs are implementation-defined.

/// FNV-1a over `key`, folded with `seed` and finished with splitmix64.
uint64_t KeyedHash(uint64_t seed, std::string_view key);

/// Maps the top 53 bits of `bits` to [0, 1).
double UnitInterval(uint64_t bits);

/// Small deterministic generator (splitmix64 stream).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t state) : state_(state) {}
  uint64_t Next();
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  uint64_t Below(uint64_t bound);

 private:
  uint64_t state_;
};

/// Seed taken from the VOXANON_SEED environment variable, if set and valid.
std::optional<uint64_t> SeedFromEnvironment();

}  // namespace voxanon

#endif  // VOXANON_BASE_HASH_H_
