// embedding/embedding-anon.cc

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

#include "voxanon/embedding/embedding-anon.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "voxanon/base/errors.h"
#include "voxanon/base/hash.h"
#include "voxanon/base/text.h"
#include "voxanon/simd/kernels.h"

namespace voxanon {

EmbeddingPool::EmbeddingPool(std::vector<Embedding> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DataError("embedding pool is empty");
  dim_ = entries_.front().vector.size();
  if (dim_ == 0) throw DataError("embedding pool has zero-dimensional vectors");
  std::set<std::string> ids;
  for (const Embedding &e : entries_) {
    if (e.vector.size() != dim_)
      throw DataError("pool entry '" + e.id + "' has dimension " +
                      std::to_string(e.vector.size()) + ", expected " + std::to_string(dim_));
    for (double v : e.vector)
      if (!std::isfinite(v)) throw DataError("pool entry '" + e.id + "' is not finite");
    if (!ids.insert(e.id).second) throw DataError("duplicate pool id '" + e.id + "'");
  }
}

void AffinityTable::Set(const std::string &source_id, const std::string &pool_id, double score) {
  if (!std::isfinite(score))
    throw DataError("non-finite affinity for (" + source_id + ", " + pool_id + ")");
  if (!scores_.emplace(std::make_pair(source_id, pool_id), score).second)
    throw DataError("duplicate affinity for (" + source_id + ", " + pool_id + ")");
}

const double *AffinityTable::Find(const std::string &source_id, const std::string &pool_id) const {
  auto it = scores_.find(std::make_pair(source_id, pool_id));
  return it == scores_.end() ? nullptr : &it->second;
}

namespace {

// Larger = farther, for every pool entry in pool order.
std::vector<double> Distances(const Embedding &source, const EmbeddingPool &pool,
                              const DistanceSpec &dist) {
  std::vector<double> out(pool.size());
  if (const auto *pre = std::get_if<PrecomputedScores>(&dist)) {
    if (!pre->table) throw ArgumentError("PrecomputedScores without a table");
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const double *s = pre->table->Find(source.id, pool.entries()[i].id);
      if (s == nullptr)
        throw DataError("no affinity for (" + source.id + ", " + pool.entries()[i].id + ")");
      out[i] = -*s;
    }
    return out;
  }
  if (source.vector.size() != pool.dimension())
    throw ArgumentError("source '" + source.id + "' has dimension " +
                        std::to_string(source.vector.size()) + ", pool has " +
                        std::to_string(pool.dimension()));
  const double source_norm = std::sqrt(simd::SumSquares(source.vector));
  if (!(source_norm > 0.0)) throw DataError("source '" + source.id + "' has zero norm");
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const std::vector<double> &v = pool.entries()[i].vector;
    const double norm = std::sqrt(simd::SumSquares(v));
    if (!(norm > 0.0)) throw DataError("pool entry '" + pool.entries()[i].id + "' has zero norm");
    out[i] = 1.0 - simd::Dot(source.vector, v) / (source_norm * norm);
  }
  return out;
}

}  // namespace

std::vector<std::string> SelectFarthest(const Embedding &source, const EmbeddingPool &pool,
                                        const DistanceSpec &dist, std::size_t n) {
  if (n > pool.size())
    throw ArgumentError("SelectFarthest: n = " + std::to_string(n) + " exceeds pool size " +
                        std::to_string(pool.size()));
  const std::vector<double> d = Distances(source, pool, dist);
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto farther = [&](std::size_t a, std::size_t b) {
    if (d[a] != d[b]) return d[a] > d[b];
    return pool.entries()[a].id < pool.entries()[b].id;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    farther);
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(pool.entries()[order[i]].id);
  return ids;
}

std::vector<double> AnonymizeEmbedding(const Embedding &source, const EmbeddingPool &pool,
                                       const DistanceSpec &dist, std::size_t n,
                                       std::size_t n_star, uint64_t seed,
                                       const std::string &key) {
  if (n_star == 0) throw ArgumentError("AnonymizeEmbedding: n_star must be at least 1");
  if (n_star > n)
    throw ArgumentError("AnonymizeEmbedding: n_star = " + std::to_string(n_star) +
                        " exceeds n = " + std::to_string(n));
  std::vector<std::string> farthest = SelectFarthest(source, pool, dist, n);

  // Partial Fisher-Yates: the first n_star slots become a uniform subset.
  std::vector<std::size_t> slots(farthest.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
  SplitMix64 rng(KeyedHash(seed, key));
  for (std::size_t i = 0; i < n_star; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.Below(slots.size() - i));
    std::swap(slots[i], slots[j]);
  }
  std::sort(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(n_star));

  std::map<std::string, const std::vector<double> *> by_id;
  for (const Embedding &e : pool.entries()) by_id.emplace(e.id, &e.vector);
  std::vector<double> mean(pool.dimension(), 0.0);
  for (std::size_t i = 0; i < n_star; ++i) simd::Accumulate(*by_id.at(farthest[slots[i]]), mean);
  for (double &v : mean) v /= static_cast<double>(n_star);
  return mean;
}

std::vector<Embedding> ReadEmbeddings(const std::filesystem::path &path) {
  std::vector<Embedding> out;
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() != 2 || cols[0].empty())
      throw ParseError(path.string(), line_no, "expected id<TAB>v1 v2 ... vd");
    Embedding e;
    e.id = cols[0];
    try {
      for (const std::string &tok : SplitWhitespace(cols[1])) e.vector.push_back(ParseDouble(tok));
    } catch (const FormatError &err) {
      throw ParseError(path.string(), line_no, err.what());
    }
    if (e.vector.empty()) throw ParseError(path.string(), line_no, "empty vector");
    out.push_back(std::move(e));
  });
  return out;
}

void WriteEmbeddings(const std::vector<Embedding> &embeddings, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const Embedding &e : embeddings) {
    out << e.id << '\t';
    for (std::size_t i = 0; i < e.vector.size(); ++i)
      out << (i ? " " : "") << FormatDouble(e.vector[i]);
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::shared_ptr<AffinityTable> ReadAffinities(const std::filesystem::path &path) {
  auto table = std::make_shared<AffinityTable>();
  ForEachLine(path, [&](const std::string &line, std::size_t line_no) {
    std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() != 3)
      throw ParseError(path.string(), line_no, "expected source_id<TAB>pool_id<TAB>score");
    try {
      table->Set(cols[0], cols[1], ParseDouble(cols[2]));
    } catch (const Error &err) {
      throw ParseError(path.string(), line_no, err.what());
    }
  });
  return table;
}

}  // namespace voxanon
