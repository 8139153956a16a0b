// voxanon/simd/kernels.h

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

#ifndef VOXANON_SIMD_KERNELS_H_
#define VOXANON_SIMD_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace voxanon::simd {

/*
  Data-parallel inner loops shared by the LPC analyser, the pitch estimator,
  windowing/overlap-add and embedding scoring.

  Each kernel has a scalar reference implementation and, where the target
  supports it, an AVX2+FMA (x86-64) or NEON (aarch64) variant.  The variant
  is picked once at first use from the CPU's capabilities; setting the
  environment variable VOXANON_SIMD=scalar forces the reference path.
  Vector variants reassociate sums, so results agree with the scalar path
  to rounding, not bit-for-bit.
*/

enum class Isa { kScalar, kAvx2, kNeon };

struct KernelTable {
  Isa isa;
  /// sum_i a[i] * b[i]
  double (*dot)(const double *a, const double *b, std::size_t n);
  /// out[i] = a[i] * b[i]; out may alias a or b.
  void (*multiply)(const double *a, const double *b, double *out, std::size_t n);
  /// out[i] += in[i]
  void (*accumulate)(const double *in, double *out, std::size_t n);
  /// out[i] += alpha * in[i]
  void (*axpy)(double alpha, const double *in, double *out, std::size_t n);
};

std::string_view IsaName(Isa isa);

/// True if this binary carries kernels for `isa` and the CPU can run them.
bool IsaSupported(Isa isa);

/// Every ISA usable on this machine, scalar first.
std::vector<Isa> SupportedIsas();

/// Kernel table for a specific ISA; throws ArgumentError if unsupported.
const KernelTable &KernelsFor(Isa isa);

/// Table currently used by the span wrappers below.
const KernelTable &ActiveKernels();

/// Overrides the runtime choice (tests, benchmarking).  Thread-safe, but
/// intended to be called before worker threads start.
void SetActiveIsa(Isa isa);

double Dot(std::span<const double> a, std::span<const double> b);
double SumSquares(std::span<const double> a);
void Multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out);
void Accumulate(std::span<const double> in, std::span<double> out);
void Axpy(double alpha, std::span<const double> in, std::span<double> out);

// Per-ISA entry points, exposed for the dispatcher and equivalence tests.
namespace scalar {
const KernelTable &Table();
}
#ifdef VOXANON_HAVE_AVX2_KERNELS
namespace avx2 {
const KernelTable &Table();
}
#endif
#ifdef VOXANON_HAVE_NEON_KERNELS
namespace neon {
const KernelTable &Table();
}
#endif

}  // namespace voxanon::simd

#endif  // VOXANON_SIMD_KERNELS_H_
