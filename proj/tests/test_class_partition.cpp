// Copyright 2026 The LayerScope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <set>

#include <catch_amalgamated.hpp>

#include "layerscope/class_partition.hpp"
#include "test_support.hpp"

using namespace layerscope;
using layerscope::testing::default_grid;
using layerscope::testing::gv;

namespace {

std::vector<std::string> pattern_names(Family f, int D) {
  std::vector<std::string> out;
  for (const auto& c : enumerate_classes(f, D)) out.push_back(format_pattern(c.pattern));
  return out;
}

// Histogram of distinct-symbol counts over every word of length D that
// satisfies the family rule, taking one word per relabeling class. Words
// over D+1 symbols realize every class.
std::map<int, int> brute_histogram(Family f, int D) {
  std::set<std::vector<int>> seen;
  std::vector<int> word(D, 0);
  const int A = D + 1;
  while (true) {
    bool ok = true;
    if (f == Family::kKautz) {
      for (int k = 0; k + 1 < D; ++k) ok = ok && word[k] != word[k + 1];
    }
    if (ok) {
      std::vector<int> rename(A, -1), code;
      int next = 0;
      for (int x : word) {
        if (rename[x] < 0) rename[x] = next++;
        code.push_back(rename[x]);
      }
      seen.insert(code);
    }
    int pos = D - 1;
    while (pos >= 0 && word[pos] == A - 1) word[pos--] = 0;
    if (pos < 0) break;
    ++word[pos];
  }
  std::map<int, int> out;
  for (const auto& code : seen) ++out[*std::max_element(code.begin(), code.end()) + 1];
  return out;
}

}  // namespace

TEST_CASE("canonical patterns") {
  CHECK(format_pattern(canonical_pattern(gv("γαγβ"))) == "0102");
  CHECK(format_pattern(canonical_pattern(gv("αβαβ"))) == "0101");
  CHECK(canonical_pattern(gv("γαγβ")).s == 3);

  const auto params = GraphParams::concrete(Family::kKautz, 3, 4);
  const auto g = build_explicit(params);
  std::vector<int> sigma{0, 1, 2, 3};
  do {
    for (const auto& v : g.vertices) {
      std::vector<int> mapped;
      for (int x : v.symbols()) mapped.push_back(sigma[x]);
      REQUIRE(canonical_pattern(Vertex(mapped)) == canonical_pattern(v));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("class enumeration") {
  CHECK(pattern_names(Family::kKautz, 4) ==
        std::vector<std::string>{"0101", "0102", "0120", "0121", "0123"});
  CHECK(pattern_names(Family::kDeBruijn, 2) == std::vector<std::string>{"00", "01"});
  CHECK(n_s_counts(Family::kKautz, 4) == std::map<int, std::uint64_t>{{2, 1}, {3, 3}, {4, 1}});
  CHECK(n_s_counts(Family::kDeBruijn, 4) ==
        std::map<int, std::uint64_t>{{1, 1}, {2, 7}, {3, 6}, {4, 1}});
  CHECK(n_s_counts(Family::kDeBruijn, 1) == std::map<int, std::uint64_t>{{1, 1}});
  CHECK_THROWS_AS(enumerate_classes(Family::kKautz, 0), Error);
  CHECK_THROWS_AS(enumerate_classes(Family::kKautz, 17), Error);
}

TEST_CASE("class counts match brute-force enumeration") {
  for (Family f : {Family::kDeBruijn, Family::kKautz}) {
    for (int D = 1; D <= 7; ++D) {
      std::map<int, int> expected = brute_histogram(f, D);
      std::map<int, int> got;
      for (const auto& [s, n] : n_s_counts(f, D)) got[s] = static_cast<int>(n);
      INFO("D=" << D);
      CHECK(got == expected);
      if (f == Family::kDeBruijn && D >= 2) {
        CHECK(got[2] == (1 << (D - 1)) - 1);
        int pow3 = 1;
        for (int t = 0; t < D - 1; ++t) pow3 *= 3;
        CHECK(got[3] == (pow3 - (1 << D) + 1) / 2);
      }
      if (f == Family::kKautz && D >= 3) CHECK(got[3] == (1 << (D - 2)) - 1);
    }
  }
}

TEST_CASE("representatives") {
  const auto k24 = GraphParams::concrete(Family::kKautz, 2, 4);
  const auto k34 = GraphParams::concrete(Family::kKautz, 3, 4);
  CHECK(representative(class_of(Family::kKautz, parse_pattern(Family::kKautz, "0101")), k24) ==
        gv("αβαβ"));
  try {
    representative(class_of(Family::kKautz, parse_pattern(Family::kKautz, "0123")), k24);
    FAIL("expected AlphabetTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAlphabetTooSmall);
  }
  CHECK(representative(class_of(Family::kKautz, parse_pattern(Family::kKautz, "0102")), k34) ==
        gv("αβαγ"));
  CHECK_THROWS_AS(parse_pattern(Family::kKautz, "0110"), Error);
  CHECK_THROWS_AS(parse_pattern(Family::kKautz, "1010"), Error);
}

TEST_CASE("cardinalities sum to the vertex count") {
  for (Family f : {Family::kDeBruijn, Family::kKautz}) {
    for (int D = 1; D <= 6; ++D) {
      IntPolynomial total;
      for (const auto& c : enumerate_classes(f, D)) total += c.cardinality;
      const IntPolynomial expected =
          f == Family::kDeBruijn ? d_pow(D) : d_pow(D) + d_pow(D - 1);
      CHECK(total == expected);
    }
  }
  CHECK(poly_format(class_cardinality(Family::kKautz, 4)) == "d^4 - 2d^3 - d^2 + 2d");
  CHECK(poly_format(class_cardinality(Family::kDeBruijn, 2)) == "d^2 - d");
}

TEST_CASE("explicit vertices grouped by pattern give the class sizes") {
  for (const auto& c : default_grid()) {
    const auto params = GraphParams::concrete(c.family, c.d, c.D);
    std::map<Pattern, int> groups;
    for (const auto& v : build_explicit(params).vertices) ++groups[canonical_pattern(v)];
    for (const auto& cls : enumerate_classes(c.family, c.D)) {
      const auto it = groups.find(cls.pattern);
      const int count = it == groups.end() ? 0 : it->second;
      INFO(layerscope::testing::grid_name(c) << " " << format_pattern(cls.pattern));
      CHECK(cls.cardinality.eval(c.d) == count);
    }
    CHECK(groups.size() <= enumerate_classes(c.family, c.D).size());
  }
}

TEST_CASE("class export") {
  const auto classes = enumerate_classes(Family::kKautz, 4);
  const auto j = classes_to_json(classes);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["pattern"] == "0101");
  CHECK(j[0]["s"] == 2);
  CHECK(j[0]["cardinality"] == "d^2 + d");
  const std::string csv = classes_to_csv(classes);
  CHECK(csv.rfind("pattern,s,cardinality\n0101,2,\"d^2 + d\"\n", 0) == 0);
}
