// tests/base-test.cc

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

#include <cstdlib>
#include <fstream>
#include <set>

#include "doctest.h"
#include "support/synth.h"
#include "voxanon/base/errors.h"
#include "voxanon/base/hash.h"
#include "voxanon/base/text.h"

using namespace voxanon;

TEST_CASE("KeyedHash is stable and key sensitive") {
  CHECK(KeyedHash(0, "spk/trial/A") == KeyedHash(0, "spk/trial/A"));
  CHECK(KeyedHash(0, "spk/trial/A") != KeyedHash(1, "spk/trial/A"));
  CHECK(KeyedHash(0, "spk/trial/A") != KeyedHash(0, "spk/trial/B"));
  std::set<uint64_t> seen;
  for (int i = 0; i < 10000; ++i) seen.insert(KeyedHash(7, "k" + std::to_string(i)));
  CHECK(seen.size() == 10000);
}

TEST_CASE("UnitInterval covers [0, 1)") {
  CHECK(UnitInterval(0) == 0.0);
  CHECK(UnitInterval(~uint64_t{0}) < 1.0);
  CHECK(UnitInterval(uint64_t{1} << 63) == 0.5);
}

TEST_CASE("SplitMix64::Below is bounded and roughly uniform") {
  SplitMix64 rng(42);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    uint64_t v = rng.Below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK_THROWS_AS(rng.Below(0), ArgumentError);
  SplitMix64 a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.Next() == b.Next());
}

TEST_CASE("SeedFromEnvironment") {
  ::unsetenv("VOXANON_SEED");
  CHECK_FALSE(SeedFromEnvironment().has_value());
  ::setenv("VOXANON_SEED", "1234", 1);
  CHECK(SeedFromEnvironment() == std::optional<uint64_t>(1234));
  ::setenv("VOXANON_SEED", "12x", 1);
  CHECK_THROWS_AS(SeedFromEnvironment(), ConfigError);
  ::unsetenv("VOXANON_SEED");
}

TEST_CASE("ParseDouble accepts whole finite numbers only") {
  CHECK(ParseDouble("1.5") == 1.5);
  CHECK(ParseDouble("-2e-3") == -2e-3);
  CHECK(ParseDouble("+4") == 4.0);
  CHECK_THROWS_AS(ParseDouble(""), FormatError);
  CHECK_THROWS_AS(ParseDouble("1.5x"), FormatError);
  CHECK_THROWS_AS(ParseDouble("nan"), FormatError);
  CHECK_THROWS_AS(ParseDouble("inf"), FormatError);
  CHECK_THROWS_AS(ParseDouble("+-1"), FormatError);
  CHECK_THROWS_AS(ParseDouble("+"), FormatError);
}

TEST_CASE("FormatDouble round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 7.7685, -1e-300, 123456789.125, 0.0})
    CHECK(ParseDouble(FormatDouble(v)) == v);
  CHECK(FormatDouble(0.5) == "0.5");
  CHECK(FormatFixed(7.7685, 2) == "7.77");
}

TEST_CASE("Splitting") {
  CHECK(SplitTabs("a\tb\t\tc") == std::vector<std::string>{"a", "b", "", "c"});
  CHECK(SplitTabs("") == std::vector<std::string>{""});
  CHECK(SplitWhitespace("  a  b\tc ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(SplitWhitespace("   ").empty());
}

TEST_CASE("ForEachLine skips blanks and comments and reports line numbers") {
  auto dir = testing::ScratchDir("base");
  {
    std::ofstream out(dir / "f.txt");
    out << "# header\nfirst\r\n\n   \nsecond\n";
  }
  std::vector<std::pair<std::string, std::size_t>> seen;
  ForEachLine(dir / "f.txt", [&](const std::string &l, std::size_t n) { seen.emplace_back(l, n); });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::make_pair(std::string("first"), std::size_t{2}));
  CHECK(seen[1] == std::make_pair(std::string("second"), std::size_t{5}));
  CHECK_THROWS_AS(ForEachLine(dir / "missing", [](const std::string &, std::size_t) {}), IoError);
}

TEST_CASE("ParseError carries the line number") {
  ParseError e("x.tsv", 7, "bad");
  CHECK(e.line() == 7);
  CHECK(std::string(e.what()).find("x.tsv:7") != std::string::npos);
}
