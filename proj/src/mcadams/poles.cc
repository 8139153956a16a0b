// mcadams/poles.cc

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

#include "voxanon/mcadams/poles.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "voxanon/base/errors.h"

namespace voxanon {

namespace {

constexpr int kNewtonSteps = 4;
constexpr double kResidualTolerance = 1e-6;
constexpr double kImagResidue = 1e-9;

// p(z) and p'(z) of the monic polynomial by Horner's rule.
template <typename T>
void EvaluateWithDerivative(std::span<const double> a, T z, T *value, T *derivative) {
  T p = T(1.0), dp = T(0.0);
  for (double ai : a) {
    dp = dp * z + p;
    p = p * z - ai;
  }
  *value = p;
  *derivative = dp;
}

template <typename T>
T Polish(std::span<const double> a, T z) {
  T p, dp;
  EvaluateWithDerivative(a, z, &p, &dp);
  for (int step = 0; step < kNewtonSteps; ++step) {
    if (std::abs(p) == 0.0 || std::abs(dp) == 0.0) break;
    T candidate = z - p / dp;
    T cp, cdp;
    EvaluateWithDerivative(a, candidate, &cp, &cdp);
    if (!(std::abs(cp) < std::abs(p))) break;
    z = candidate;
    p = cp;
    dp = cdp;
  }
  return z;
}

}  // namespace

bool IsConjugateSymmetric(const PoleSet &set, double tol) {
  std::vector<Pole> upper, lower;
  for (const Pole &p : set.poles) {
    if (p.imag() > tol) upper.push_back(p);
    else if (p.imag() < -tol) lower.push_back(std::conj(p));
  }
  if (upper.size() != lower.size()) return false;
  std::vector<bool> used(lower.size(), false);
  for (const Pole &p : upper) {
    bool matched = false;
    for (std::size_t j = 0; j < lower.size() && !matched; ++j) {
      if (!used[j] && std::abs(lower[j] - p) <= tol) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Pole EvaluateMonic(std::span<const double> coefficients, Pole z) {
  Pole p, dp;
  EvaluateWithDerivative(coefficients, z, &p, &dp);
  return p;
}

PoleSet FindPoles(std::span<const double> coefficients) {
  PoleSet out;
  const auto order = static_cast<Eigen::Index>(coefficients.size());
  if (order == 0) return out;
  for (double c : coefficients)
    if (!std::isfinite(c)) throw NumericalError("FindPoles: non-finite coefficient");

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(order, order);
  for (Eigen::Index j = 0; j < order; ++j) companion(0, j) = coefficients[j];
  for (Eigen::Index i = 1; i < order; ++i) companion(i, i - 1) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("FindPoles: eigenvalue iteration did not converge (order " +
                         std::to_string(order) + ")");

  const Eigen::VectorXcd &eig = solver.eigenvalues();
  std::size_t n_lower = 0, n_upper = 0;
  out.poles.reserve(static_cast<std::size_t>(order));
  for (Eigen::Index i = 0; i < order; ++i) {
    const Pole z = eig[i];
    if (z.imag() > 0.0) {
      ++n_upper;
      Pole refined = Polish(coefficients, z);
      // Keep the pair in the upper/lower arrangement even if Newton nudged it.
      if (refined.imag() < 0.0) refined = std::conj(refined);
      out.poles.push_back(refined);
      out.poles.push_back(std::conj(refined));
    } else if (z.imag() < 0.0) {
      ++n_lower;
    } else {
      out.poles.emplace_back(Polish(coefficients, z.real()), 0.0);
    }
  }
  if (n_lower != n_upper)
    throw NumericalError("FindPoles: eigenvalues are not conjugate-paired");

  double scale = 1.0;
  for (double c : coefficients) scale = std::max(scale, std::abs(c));
  for (const Pole &z : out.poles) {
    double residual = std::abs(EvaluateMonic(coefficients, z));
    if (!(residual <= kResidualTolerance * scale))
      throw NumericalError("FindPoles: root residual " + std::to_string(residual) +
                           " exceeds tolerance");
  }
  return out;
}

std::vector<double> PolesToCoeffs(const PoleSet &set, double stability_margin) {
  const std::size_t p = set.size();
  // poly[k] is the coefficient of z^{p-k} in prod (z - pole).
  std::vector<Pole> poly(1, Pole(1.0, 0.0));
  poly.reserve(p + 1);
  for (Pole z : set.poles) {
    const double mag = std::abs(z);
    if (mag >= 1.0) z *= stability_margin / mag;
    poly.push_back(Pole(0.0, 0.0));
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] -= z * poly[k - 1];
  }
  double scale = 1.0;
  for (const Pole &c : poly) scale = std::max(scale, std::abs(c));
  std::vector<double> a(p);
  for (std::size_t k = 1; k <= p; ++k) {
    if (std::abs(poly[k].imag()) > kImagResidue * scale)
      throw ArgumentError("PolesToCoeffs: pole set is not conjugate-symmetric");
    a[k - 1] = -poly[k].real();
  }
  return a;
}

PoleSet McAdamsShift(const PoleSet &set, double alpha, double real_pole_epsilon) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ArgumentError("McAdamsShift: alpha must be positive, got " + std::to_string(alpha));
  auto shift_upper = [&](Pole z) -> Pole {
    const double phi = std::arg(z);
    if (!(phi > 0.0 && phi < std::numbers::pi))
      throw NumericalError("McAdamsShift: upper-half pole has phase " + std::to_string(phi));
    const double warped = std::min(std::pow(phi, alpha), std::numbers::pi);
    // A move below the rounding of arg() itself would only add noise.
    if (std::abs(warped - phi) <= 4.0 * std::numeric_limits<double>::epsilon() * phi) return z;
    return std::polar(std::abs(z), warped);
  };
  PoleSet out;
  out.poles.reserve(set.size());
  for (const Pole &z : set.poles) {
    if (std::abs(z.imag()) <= real_pole_epsilon) {
      out.poles.push_back(z);
    } else if (z.imag() > 0.0) {
      out.poles.push_back(shift_upper(z));
    } else {
      out.poles.push_back(std::conj(shift_upper(std::conj(z))));
    }
  }
  return out;
}

}  // namespace voxanon
