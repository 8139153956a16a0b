// mcadams/lpc.cc

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

#include "voxanon/mcadams/lpc.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "voxanon/base/errors.h"
#include "voxanon/simd/kernels.h"

namespace voxanon {

std::vector<double> Autocorrelation(std::span<const double> x, int max_lag) {
  if (max_lag < 0) throw ArgumentError("Autocorrelation: negative lag");
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  const std::size_t n = x.size();
  for (std::size_t k = 0; k < r.size() && k < n; ++k)
    r[k] = simd::Dot(x.subspan(0, n - k), x.subspan(k, n - k));
  return r;
}

std::vector<double> LevinsonDurbin(std::span<const double> r, int order,
                                   double *prediction_error) {
  if (order < 0 || r.size() < static_cast<std::size_t>(order) + 1)
    throw ArgumentError("LevinsonDurbin: need r[0.." + std::to_string(order) + "]");
  std::vector<double> a(order, 0.0), prev(order, 0.0);
  double err = r.empty() ? 0.0 : r[0];
  for (int i = 0; i < order && err > 0.0; ++i) {
    double acc = r[i + 1];
    for (int j = 0; j < i; ++j) acc -= a[j] * r[i - j];
    double k = acc / err;
    if (!(std::abs(k) < 1.0)) break;
    prev.assign(a.begin(), a.end());
    a[i] = k;
    for (int j = 0; j < i; ++j) a[j] = prev[j] - k * prev[i - 1 - j];
    err *= (1.0 - k * k);
  }
  if (prediction_error != nullptr) *prediction_error = err;
  return a;
}

std::vector<double> LpcResidual(std::span<const double> frame,
                                std::span<const double> coefficients) {
  std::vector<double> e(frame.begin(), frame.end());
  const std::size_t n = frame.size();
  // e[i..n) -= a_i * x[0..n-i), one vectorised pass per tap.
  for (std::size_t i = 1; i <= coefficients.size() && i < n; ++i)
    simd::Axpy(-coefficients[i - 1], frame.subspan(0, n - i),
               std::span<double>(e.data() + i, n - i));
  return e;
}

LpcFrame LpcAnalyze(std::span<const double> frame, int order) {
  if (order < 0 || static_cast<std::size_t>(order) >= frame.size())
    throw ArgumentError("LpcAnalyze: order " + std::to_string(order) +
                        " must be below frame length " + std::to_string(frame.size()));
  LpcFrame out;
  std::vector<double> r = Autocorrelation(frame, order);
  if (!(r[0] > 0.0) || !std::isfinite(r[0])) {
    if (!std::isfinite(r[0])) throw NumericalError("LpcAnalyze: non-finite frame");
    out.coefficients.assign(order, 0.0);
    out.residual.assign(frame.size(), 0.0);
    out.degenerate = true;
    return out;
  }
  double err = 0.0;
  out.coefficients = LevinsonDurbin(r, order, &err);
  out.gain = std::sqrt(std::max(err, 0.0));
  out.residual = LpcResidual(frame, out.coefficients);
  return out;
}

std::vector<double> SynthesizeFrame(std::span<const double> residual,
                                    std::span<const double> coefficients) {
  const std::size_t n = residual.size();
  const std::size_t p = coefficients.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    double acc = residual[t];
    const std::size_t taps = std::min(p, t);
    for (std::size_t i = 1; i <= taps; ++i) acc += coefficients[i - 1] * y[t - i];
    if (!std::isfinite(acc))
      throw NumericalError("SynthesizeFrame: non-finite output at sample " + std::to_string(t));
    y[t] = acc;
  }
  return y;
}

}  // namespace voxanon
