// simd/kernels.cc

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

#include "voxanon/simd/kernels.h"

#include <atomic>
#include <cstdlib>
#include <string>

#include "voxanon/base/errors.h"

namespace voxanon::simd {

namespace {

bool CpuHasAvx2Fma() {
#if defined(VOXANON_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable *Detect() {
  const char *env = std::getenv("VOXANON_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return &scalar::Table();
#ifdef VOXANON_HAVE_AVX2_KERNELS
  if (CpuHasAvx2Fma()) return &avx2::Table();
#endif
#ifdef VOXANON_HAVE_NEON_KERNELS
  return &neon::Table();
#endif
  return &scalar::Table();
}

std::atomic<const KernelTable *> g_active{nullptr};

void CheckSizes(std::size_t a, std::size_t b, const char *what) {
  if (a != b)
    throw ArgumentError(std::string(what) + ": length mismatch " + std::to_string(a) +
                        " vs " + std::to_string(b));
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool IsaSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2: return CpuHasAvx2Fma();
    case Isa::kNeon:
#ifdef VOXANON_HAVE_NEON_KERNELS
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> SupportedIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon})
    if (IsaSupported(isa)) out.push_back(isa);
  return out;
}

const KernelTable &KernelsFor(Isa isa) {
  if (!IsaSupported(isa))
    throw ArgumentError("SIMD kernels not available: " + std::string(IsaName(isa)));
  switch (isa) {
#ifdef VOXANON_HAVE_AVX2_KERNELS
    case Isa::kAvx2: return avx2::Table();
#endif
#ifdef VOXANON_HAVE_NEON_KERNELS
    case Isa::kNeon: return neon::Table();
#endif
    default: return scalar::Table();
  }
}

const KernelTable &ActiveKernels() {
  const KernelTable *table = g_active.load(std::memory_order_acquire);
  if (table == nullptr) {
    const KernelTable *detected = Detect();
    // Losing the race is fine: every thread detects the same table.
    g_active.compare_exchange_strong(table, detected, std::memory_order_acq_rel);
    table = g_active.load(std::memory_order_acquire);
  }
  return *table;
}

void SetActiveIsa(Isa isa) {
  g_active.store(&KernelsFor(isa), std::memory_order_release);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  CheckSizes(a.size(), b.size(), "Dot");
  return ActiveKernels().dot(a.data(), b.data(), a.size());
}

double SumSquares(std::span<const double> a) {
  return ActiveKernels().dot(a.data(), a.data(), a.size());
}

void Multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  CheckSizes(a.size(), b.size(), "Multiply");
  CheckSizes(a.size(), out.size(), "Multiply");
  ActiveKernels().multiply(a.data(), b.data(), out.data(), a.size());
}

void Accumulate(std::span<const double> in, std::span<double> out) {
  CheckSizes(in.size(), out.size(), "Accumulate");
  ActiveKernels().accumulate(in.data(), out.data(), in.size());
}

void Axpy(double alpha, std::span<const double> in, std::span<double> out) {
  CheckSizes(in.size(), out.size(), "Axpy");
  ActiveKernels().axpy(alpha, in.data(), out.data(), in.size());
}

}  // namespace voxanon::simd
