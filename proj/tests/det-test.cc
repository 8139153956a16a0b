// tests/det-test.cc

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
#include <fstream>
#include <random>

#include "doctest.h"
#include "support/synth.h"
#include "voxanon/base/errors.h"
#include "voxanon/eval/det.h"
#include "voxanon/eval/table-io.h"

using namespace voxanon;

namespace {

// O(n^2) sweep: accept iff score >= theta, thresholds at -inf, every
// distinct score and +inf; first minimum of |P_fa - P_miss| wins.
double BruteForceEer(const std::vector<double> &tar, const std::vector<double> &non) {
  std::vector<double> th{-INFINITY};
  for (double s : tar) th.push_back(s);
  for (double s : non) th.push_back(s);
  th.push_back(INFINITY);
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  double best_gap = 2.0, eer = -1.0;
  for (double t : th) {
    double fa = 0, miss = 0;
    for (double s : non) fa += s >= t;
    for (double s : tar) miss += s < t;
    fa /= non.size();
    miss /= tar.size();
    if (std::abs(fa - miss) < best_gap) {
      best_gap = std::abs(fa - miss);
      eer = (fa + miss) / 2;
    }
  }
  return eer;
}

}  // namespace

TEST_CASE("DET points for small hand-checked sets") {
  DetCurve sep = ComputeDet(std::vector<double>{1, 2}, std::vector<double>{-1, -2});
  bool has_zero = false;
  for (const DetPoint &p : sep.points) has_zero |= p.p_fa == 0.0 && p.p_miss == 0.0;
  CHECK(has_zero);
  CHECK(ComputeEer(sep) == 0.0);

  DetCurve same = ComputeDet(std::vector<double>{0}, std::vector<double>{0});
  CHECK(ComputeEer(same) == 0.5);
  for (const DetPoint &p : same.points) CHECK((p.p_fa == 1.0 - p.p_miss));

  DetCurve three = ComputeDet(std::vector<double>{0.9, 0.8, 0.7}, std::vector<double>{0.1, 0.2, 0.75});
  auto it = std::find_if(three.points.begin(), three.points.end(),
                         [](const DetPoint &p) { return p.threshold == 0.75; });
  REQUIRE(it != three.points.end());
  CHECK(it->p_miss == doctest::Approx(1.0 / 3));
  CHECK(it->p_fa == doctest::Approx(1.0 / 3));
  CHECK(ComputeEer(three) == doctest::Approx(1.0 / 3));
  CHECK(EerThreshold(three) == 0.75);
}

TEST_CASE("DET curve is monotone and spans both extremes") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> tar(1.0, 1.0), non(-1.0, 1.0);
  std::vector<double> t(300), n(700);
  for (double &v : t) v = std::round(tar(rng) * 10) / 10;
  for (double &v : n) v = std::round(non(rng) * 10) / 10;
  DetCurve d = ComputeDet(t, n);
  CHECK(d.points.front().p_fa == 1.0);
  CHECK(d.points.front().p_miss == 0.0);
  CHECK(d.points.back().p_fa == 0.0);
  CHECK(d.points.back().p_miss == 1.0);
  for (std::size_t i = 1; i < d.points.size(); ++i) {
    CHECK(d.points[i].threshold > d.points[i - 1].threshold);
    CHECK(d.points[i].p_fa <= d.points[i - 1].p_fa);
    CHECK(d.points[i].p_miss >= d.points[i - 1].p_miss);
  }
}

TEST_CASE("EER equals the brute-force sweep") {
  std::mt19937_64 rng(99);
  for (int set = 0; set < 300; ++set) {
    std::uniform_int_distribution<int> size(1, 120);
    std::normal_distribution<double> g(0.0, 1.0);
    const bool coarse = set % 3 == 0;  // many ties
    std::vector<double> tar(size(rng)), non(size(rng));
    const double shift = std::uniform_real_distribution<double>(-1, 3)(rng);
    for (double &v : tar) v = g(rng) + shift;
    for (double &v : non) v = g(rng);
    if (coarse) {
      for (double &v : tar) v = std::round(v);
      for (double &v : non) v = std::round(v);
    }
    CHECK(ComputeEer(ComputeDet(tar, non)) == BruteForceEer(tar, non));
  }
}

TEST_CASE("EER is invariant under monotone score transforms") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> tar(200), non(300);
  for (double &v : tar) v = g(rng) + 1.5;
  for (double &v : non) v = g(rng);
  const double eer = ComputeEer(ComputeDet(tar, non));
  for (double &v : tar) v = std::exp(v);
  for (double &v : non) v = std::exp(v);
  CHECK(ComputeEer(ComputeDet(tar, non)) == eer);
}

TEST_CASE("trial and score bookkeeping") {
  TrialList trials;
  trials.Add({"e1", "t1", TrialLabel::kTarget});
  trials.Add({"e1", "t2", TrialLabel::kNontarget});
  CHECK_THROWS_AS(trials.Add({"e1", "t1", TrialLabel::kNontarget}), DataError);
  CHECK(trials.size() == 2);
  CHECK(trials.NumTargets() == 1);
  ScoreSet scores;
  scores.Set("e1", "t1", 2.0);
  CHECK_THROWS_AS(scores.Set("e1", "t1", 1.0), DataError);
  CHECK_THROWS_AS(scores.Set("e1", "t3", NAN), DataError);
  try {
    ComputeDet(scores, trials);
    FAIL("expected a missing-score error");
  } catch (const DataError &e) {
    CHECK(std::string(e.what()).find("t2") != std::string::npos);
  }
  scores.Set("e1", "t2", -1.0);
  CHECK(ComputeEer(ComputeDet(scores, trials)) == 0.0);
  CHECK_THROWS_AS(ComputeDet(std::vector<double>{}, std::vector<double>{1.0}), DataError);
}

TEST_CASE("Kaldi-style trial and score files") {
  auto dir = testing::ScratchDir("det");
  {
    std::ofstream t(dir / "trials");
    t << "e1 t1 target\ne1 t2 nontarget\ne2 t1 nontarget\n";
    std::ofstream s(dir / "scores");
    s << "e1 t1 3.5\ne1 t2 -0.5\n# comment\ne2 t1 0.25\n";
    std::ofstream bad(dir / "bad");
    bad << "e1 t1 target\ne1 t2 maybe\n";
  }
  TrialList trials = ReadTrials(dir / "trials");
  ScoreSet scores = ReadScores(dir / "scores");
  CHECK(trials.size() == 3);
  CHECK(*scores.Find("e2", "t1") == 0.25);
  CHECK(ComputeEer(ComputeDet(scores, trials)) == 0.0);
  try {
    ReadTrials(dir / "bad");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  std::string csv = DetToCsv(ComputeDet(scores, trials));
  CHECK(csv.rfind("threshold,p_fa,p_miss\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
