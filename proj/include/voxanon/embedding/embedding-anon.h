// voxanon/embedding/embedding-anon.h

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

#ifndef VOXANON_EMBEDDING_EMBEDDING_ANON_H_
#define VOXANON_EMBEDDING_EMBEDDING_ANON_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace voxanon {

struct Embedding {
  std::string id;
  std::vector<double> vector;
};

/// External speaker pool.  All vectors share one dimension.
class EmbeddingPool {
 public:
  EmbeddingPool() = default;
  /// Throws DataError on an empty pool, mixed dimensions, non-finite
  /// values or duplicate ids.
  explicit EmbeddingPool(std::vector<Embedding> entries);

  const std::vector<Embedding> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t dimension() const { return dim_; }

 private:
  std::vector<Embedding> entries_;
  std::size_t dim_ = 0;
};

/// Externally computed affinities (e.g. PLDA LLRs), higher = more similar.
class AffinityTable {
 public:
  void Set(const std::string &source_id, const std::string &pool_id, double score);
  const double *Find(const std::string &source_id, const std::string &pool_id) const;

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

/// Cosine distance 1 - cos(source, candidate); self-contained fallback.
struct CosineDistance {};

/// Affinities looked up by (source id, pool id); lowest affinity = farthest.
struct PrecomputedScores {
  std::shared_ptr<const AffinityTable> table;
};

using DistanceSpec = std::variant<CosineDistance, PrecomputedScores>;

/// The `n` pool ids farthest from `source`, farthest first; ties broken by
/// ascending id.  n > pool size raises ArgumentError; a zero-norm vector
/// under cosine distance or a missing affinity raises DataError.
std::vector<std::string> SelectFarthest(const Embedding &source, const EmbeddingPool &pool,
                                        const DistanceSpec &dist, std::size_t n);

/**
   Pseudo-speaker embedding: picks a uniformly random `n_star`-subset of the
   `n` farthest pool entries and returns the mean of the chosen vectors.
   The subset depends only on (seed, key), so the same key always maps to
   the same pseudo-speaker; callers choose the key (per speaker or per
   utterance).  Requires n_star <= n <= pool size and n_star >= 1.
*/
std::vector<double> AnonymizeEmbedding(const Embedding &source, const EmbeddingPool &pool,
                                       const DistanceSpec &dist, std::size_t n,
                                       std::size_t n_star, uint64_t seed,
                                       const std::string &key);

/// Reads `id<TAB>v1 v2 ... vd` lines.
std::vector<Embedding> ReadEmbeddings(const std::filesystem::path &path);
void WriteEmbeddings(const std::vector<Embedding> &embeddings, const std::filesystem::path &path);

/// Reads `source_id<TAB>pool_id<TAB>score` lines.
std::shared_ptr<AffinityTable> ReadAffinities(const std::filesystem::path &path);

}  // namespace voxanon

#endif  // VOXANON_EMBEDDING_EMBEDDING_ANON_H_
