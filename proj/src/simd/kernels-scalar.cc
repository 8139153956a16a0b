// simd/kernels-scalar.cc

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

namespace voxanon::simd::scalar {

namespace {

double Dot(const double *a, const double *b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void Multiply(const double *a, const double *b, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void Accumulate(const double *in, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += in[i];
}

void Axpy(double alpha, const double *in, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += alpha * in[i];
}

}  // namespace

const KernelTable &Table() {
  static const KernelTable table{Isa::kScalar, &Dot, &Multiply, &Accumulate, &Axpy};
  return table;
}

}  // namespace voxanon::simd::scalar
