// voxanon/mcadams/lpc.h

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

#ifndef VOXANON_MCADAMS_LPC_H_
#define VOXANON_MCADAMS_LPC_H_

#include <span>
#include <vector>

namespace voxanon {

/**
   All-pole model of one frame.  Coefficients follow the predictor
   convention: A(z) = 1 - sum_{i=1..p} a_i z^{-i}, so x[n] is predicted by
   sum_i a_i x[n-i].  The residual is the frame filtered by A(z) with zero
   initial state; running it back through 1/A(z) (SynthesizeFrame)
   reproduces the frame.
*/
struct LpcFrame {
  std::vector<double> coefficients;  // a_1 .. a_p
  double gain = 0.0;                 // sqrt of the final prediction error
  std::vector<double> residual;
  /// Zero-energy input: coefficients and residual are all zero and the
  /// frame should be passed through unmodified.
  bool degenerate = false;

  int order() const { return static_cast<int>(coefficients.size()); }
};

/// Autocorrelation r[0..max_lag] of `x` (biased, no normalization).
std::vector<double> Autocorrelation(std::span<const double> x, int max_lag);

/// Levinson-Durbin solution of the order-p normal equations from
/// autocorrelation r[0..p].  If a reflection coefficient reaches magnitude
/// 1 (numerically singular input) the recursion stops there and the
/// remaining coefficients are zero, which keeps 1/A(z) stable.
/// `prediction_error` receives the final error energy if non-null.
std::vector<double> LevinsonDurbin(std::span<const double> r, int order,
                                   double *prediction_error = nullptr);

/// FIR filter by A(z): e[n] = x[n] - sum_i a_i x[n-i], zero history.
std::vector<double> LpcResidual(std::span<const double> frame,
                                std::span<const double> coefficients);

/// Autocorrelation-method LPC of a windowed frame; requires
/// order < frame.size().
LpcFrame LpcAnalyze(std::span<const double> frame, int order);

/// All-pole synthesis y[n] = e[n] + sum_i a_i y[n-i] with zero initial
/// state.  Throws NumericalError if the output is not finite.
std::vector<double> SynthesizeFrame(std::span<const double> residual,
                                    std::span<const double> coefficients);

}  // namespace voxanon

#endif  // VOXANON_MCADAMS_LPC_H_
