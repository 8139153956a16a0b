// tests/lpc-test.cc

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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "support/synth.h"
#include "voxanon/base/errors.h"
#include "voxanon/mcadams/lpc.h"
#include "voxanon/mcadams/poles.h"

using namespace voxanon;
using testing::kPi;

namespace {

double Energy(const std::vector<double> &x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

// Every pole in `want` has a partner in `got` within tol (greedy matching).
bool SamePoles(std::vector<Pole> got, const std::vector<Pole> &want, double tol) {
  if (got.size() != want.size()) return false;
  for (const Pole &w : want) {
    auto it = std::min_element(got.begin(), got.end(), [&](const Pole &a, const Pole &b) {
      return std::abs(a - w) < std::abs(b - w);
    });
    if (std::abs(*it - w) > tol) return false;
    got.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("autocorrelation against direct sums") {
  std::vector<double> x{1, 2, -1, 0.5, 3};
  std::vector<double> r = Autocorrelation(x, 6);
  REQUIRE(r.size() == 7);
  for (int k = 0; k <= 6; ++k) {
    double ref = 0.0;
    for (int i = 0; i + k < 5; ++i) ref += x[i] * x[i + k];
    CHECK(r[k] == doctest::Approx(ref));
  }
}

TEST_CASE("LPC recovers a known AR(2) process") {
  std::mt19937_64 rng(2);
  std::vector<double> x = testing::ArProcess({0.5, -0.25}, 20000, rng);
  LpcFrame f = LpcAnalyze(x, 2);
  REQUIRE(f.order() == 2);
  CHECK_FALSE(f.degenerate);
  CHECK(f.coefficients[0] == doctest::Approx(0.5).epsilon(0.1));
  CHECK(std::abs(f.coefficients[0] - 0.5) < 0.05);
  CHECK(std::abs(f.coefficients[1] + 0.25) < 0.05);
  // Unit-variance innovations: per-sample prediction error near 1.
  CHECK(f.gain * f.gain / x.size() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("Levinson-Durbin matches a direct normal-equation solve") {
  std::mt19937_64 rng(5);
  std::vector<double> x = testing::ArProcess({0.9, -0.5, 0.2}, 4000, rng);
  std::vector<double> r = Autocorrelation(x, 3);
  std::vector<double> a = LevinsonDurbin(r, 3);
  // Toeplitz system R a = r[1..3] by Gaussian elimination.
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = r[std::abs(i - j)];
    m[i][3] = r[i + 1];
  }
  for (int c = 0; c < 3; ++c)
    for (int i = c + 1; i < 3; ++i) {
      double f = m[i][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[i][j] -= f * m[c][j];
    }
  double sol[3];
  for (int i = 2; i >= 0; --i) {
    double acc = m[i][3];
    for (int j = i + 1; j < 3; ++j) acc -= m[i][j] * sol[j];
    sol[i] = acc / m[i][i];
  }
  for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(sol[i]).epsilon(1e-9));
  CHECK_THROWS_AS(LevinsonDurbin(r, 4), ArgumentError);
}

TEST_CASE("degenerate and white-noise frames") {
  LpcFrame z = LpcAnalyze(std::vector<double>(320, 0.0), 20);
  CHECK(z.degenerate);
  CHECK(z.coefficients == std::vector<double>(20, 0.0));
  CHECK(z.residual == std::vector<double>(320, 0.0));

  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int order : {1, 5, 20, 40}) {
    std::vector<double> x(320);
    for (double &v : x) v = n(rng);
    LpcFrame f = LpcAnalyze(x, order);
    CHECK(Energy(f.residual) <= Energy(x));
  }
  CHECK_THROWS_AS(LpcAnalyze(std::vector<double>(10, 1.0), 10), ArgumentError);
}

TEST_CASE("synthesis inverts analysis") {
  std::mt19937_64 rng(4);
  std::vector<double> x = testing::ArProcess({1.2, -0.8, 0.1}, 320, rng);
  std::vector<double> w = x;
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] *= 0.5 - 0.5 * std::cos(2 * kPi * static_cast<double>(i) / w.size());
  LpcFrame f = LpcAnalyze(w, 20);
  std::vector<double> y = SynthesizeFrame(f.residual, f.coefficients);
  double err = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) err = std::max(err, std::abs(y[i] - w[i]));
  double peak = 0.0;
  for (double v : w) peak = std::max(peak, std::abs(v));
  CHECK(err <= 1e-6 * peak);

  CHECK(SynthesizeFrame(std::vector<double>(8, 0.0), f.coefficients) == std::vector<double>(8, 0.0));
  std::vector<double> impulse(6, 0.0);
  impulse[0] = 1.0;
  std::vector<double> h = SynthesizeFrame(impulse, std::vector<double>{0.5});
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == std::pow(0.5, static_cast<double>(i)));
  CHECK_THROWS_AS(SynthesizeFrame(std::vector<double>(4000, 1.0), std::vector<double>{2.0}),
                  NumericalError);
}

TEST_CASE("FindPoles on hand-factored polynomials") {
  CHECK(FindPoles(std::vector<double>{}).empty());

  PoleSet dbl = FindPoles(std::vector<double>{1.0, -0.25});
  REQUIRE(dbl.size() == 2);
  for (const Pole &p : dbl.poles) CHECK(std::abs(p - Pole(0.5, 0.0)) < 1e-6);

  const double r = 0.9, phi = 1.0;
  std::vector<double> a{2 * r * std::cos(phi), -r * r};
  PoleSet pair = FindPoles(a);
  CHECK(SamePoles(pair.poles, {std::polar(r, phi), std::polar(r, -phi)}, 1e-9));
  CHECK(IsConjugateSymmetric(pair));

  PoleSet real = FindPoles(std::vector<double>{0.7});
  REQUIRE(real.size() == 1);
  CHECK(real.poles[0] == Pole(0.7, 0.0));
  CHECK_THROWS_AS(FindPoles(std::vector<double>{NAN}), NumericalError);
}

TEST_CASE("PolesToCoeffs expands by hand") {
  PoleSet dbl{{Pole(0.5, 0.0), Pole(0.5, 0.0)}};
  std::vector<double> a = PolesToCoeffs(dbl);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == doctest::Approx(1.0));
  CHECK(a[1] == doctest::Approx(-0.25));
  CHECK(PolesToCoeffs(PoleSet{}).empty());
  CHECK_THROWS_AS(PolesToCoeffs(PoleSet{{Pole(0.1, 0.5)}}), ArgumentError);
  // Outside the unit circle: projected to radius 0.999.
  std::vector<double> s = PolesToCoeffs(PoleSet{{Pole(1.5, 0.0)}});
  CHECK(s[0] == doctest::Approx(0.999));
}

TEST_CASE("root round trip on random stable filters") {
  std::mt19937_64 rng(17);
  for (int order : {2, 7, 10, 20}) {
    for (int trial = 0; trial < 100; ++trial) {
      testing::RandomFilter f = testing::RandomStableFilter(rng, order);
      PoleSet poles = FindPoles(f.coefficients);
      REQUIRE(poles.size() == static_cast<std::size_t>(order));
      CHECK(IsConjugateSymmetric(poles));
      std::vector<Pole> want;
      for (auto [rad, ang] : f.pairs) {
        want.push_back(std::polar(rad, ang));
        want.push_back(std::polar(rad, -ang));
      }
      for (double p : f.real_poles) want.emplace_back(p, 0.0);
      CHECK(SamePoles(poles.poles, want, 1e-6));
      std::vector<double> back = PolesToCoeffs(poles);
      double err = 0.0;
      for (std::size_t i = 0; i < back.size(); ++i)
        err = std::max(err, std::abs(back[i] - f.coefficients[i]));
      CHECK(err <= 1e-6);
    }
  }
}

TEST_CASE("McAdams phase warp") {
  const Pole at_one = std::polar(0.9, 1.0);
  for (double alpha : {0.5, 0.7, 0.9, 1.3}) {
    PoleSet out = McAdamsShift(PoleSet{{at_one, std::conj(at_one)}}, alpha);
    CHECK(out.poles[0] == at_one);
    CHECK(out.poles[1] == std::conj(at_one));
  }

  PoleSet half = McAdamsShift(PoleSet{{std::polar(0.9, 0.5), std::polar(0.9, -0.5)}}, 0.8);
  const double expect = std::exp(0.8 * std::log(0.5));
  CHECK(std::arg(half.poles[0]) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(0.57435).epsilon(1e-5));
  CHECK(std::arg(half.poles[1]) == doctest::Approx(-expect).epsilon(1e-12));
  CHECK(std::abs(half.poles[0]) == doctest::Approx(0.9).epsilon(1e-14));

  PoleSet real = McAdamsShift(PoleSet{{Pole(0.7, 0.0), Pole(-0.3, 0.0)}}, 0.5);
  CHECK(real.poles[0] == Pole(0.7, 0.0));
  CHECK(real.poles[1] == Pole(-0.3, 0.0));

  // Expansion beyond pi is capped there.
  PoleSet capped = McAdamsShift(PoleSet{{std::polar(0.5, 3.0), std::polar(0.5, -3.0)}}, 1.3);
  CHECK(std::arg(capped.poles[0]) == doctest::Approx(kPi));
  CHECK_THROWS_AS(McAdamsShift(PoleSet{}, 0.0), ArgumentError);
}

TEST_CASE("McAdams warp preserves magnitudes and symmetry on random sets") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> alpha(0.5, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    testing::RandomFilter f = testing::RandomStableFilter(rng, 20);
    PoleSet in = FindPoles(f.coefficients);
    PoleSet out = McAdamsShift(in, alpha(rng));
    REQUIRE(out.size() == in.size());
    for (std::size_t i = 0; i < in.size(); ++i)
      CHECK(std::abs(out.poles[i]) == doctest::Approx(std::abs(in.poles[i])).epsilon(1e-12));
    CHECK(IsConjugateSymmetric(out, 1e-12));
    std::vector<double> a = PolesToCoeffs(out);
    CHECK(a.size() == 20);
  }
}
