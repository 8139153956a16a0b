// voxanon/mcadams/poles.h

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

#ifndef VOXANON_MCADAMS_POLES_H_
#define VOXANON_MCADAMS_POLES_H_

#include <complex>
#include <span>
#include <vector>

#include "voxanon/mcadams/lpc.h"

namespace voxanon {

using Pole = std::complex<double>;

/// Roots of A(z), i.e. poles of the synthesis filter 1/A(z).  Closed under
/// conjugation; one entry per LPC coefficient.
struct PoleSet {
  std::vector<Pole> poles;

  std::size_t size() const { return poles.size(); }
  bool empty() const { return poles.empty(); }
};

/// True if every pole with |imag| > tol has a partner equal to its
/// conjugate within tol (multiplicities respected).
bool IsConjugateSymmetric(const PoleSet &set, double tol = 1e-12);

/// Evaluates the monic polynomial z^p - a_1 z^{p-1} - ... - a_p at z.
Pole EvaluateMonic(std::span<const double> coefficients, Pole z);

/// Roots of A(z) from the eigenvalues of its companion matrix, refined by
/// Newton steps.  Complex roots are returned as exact conjugate pairs
/// (upper member first).  Throws NumericalError if the eigensolver fails or
/// a root's residual |A(root)| exceeds 1e-6 times the largest monic
/// coefficient magnitude.
PoleSet FindPoles(std::span<const double> coefficients);
inline PoleSet FindPoles(const LpcFrame &lpc) { return FindPoles(lpc.coefficients); }

/// Expands prod_k (z - p_k) back into predictor coefficients a_1..a_p.
/// Poles on or outside the unit circle are first pulled radially onto
/// |z| = stability_margin.  The imaginary part left by rounding is dropped;
/// a conjugate-asymmetric input raises ArgumentError.
std::vector<double> PolesToCoeffs(const PoleSet &set, double stability_margin = 0.999);

/**
   McAdams phase warp.  Poles with |imag| <= real_pole_epsilon are copied
   unchanged.  For every other pole the angle phi in (0, pi) of the
   upper-half-plane member is replaced by phi^alpha (capped at pi) and the
   lower member receives -phi^alpha, so the set stays conjugate-symmetric.
   Magnitudes are untouched, and phi = 1 rad is a fixed point: a pole whose
   angle moves by no more than the rounding of arg() is returned
   bit-identical.
*/
PoleSet McAdamsShift(const PoleSet &set, double alpha, double real_pole_epsilon = 1e-6);

}  // namespace voxanon

#endif  // VOXANON_MCADAMS_POLES_H_
