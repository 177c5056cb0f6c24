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

#include <cmath>

#include <catch_amalgamated.hpp>

#include "layerscope/oracle.hpp"
#include "test_support.hpp"

using namespace layerscope;
using layerscope::testing::gv;

namespace {

constexpr auto kB = Family::kDeBruijn;
constexpr auto kK = Family::kKautz;

ExplicitDigraph graph(Family f, int d, int D) { return build_explicit(GraphParams::concrete(f, d, D)); }

}  // namespace

TEST_CASE("oracle layer counts") {
  const auto b27 = graph(kB, 2, 7);
  const auto counts = oracle_layer_counts(b27, gv("αββαβαβ"));
  CHECK(counts[6] == 46);
  CHECK(counts[0] == 1);
  CHECK(oracle_layer_counts(graph(kK, 2, 4), gv("αβαβ")) == std::vector<std::uint64_t>{1, 2, 3, 6, 12});
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  CHECK(total == 128);
}

TEST_CASE("oracle intersections") {
  const auto b24 = graph(kB, 2, 4);
  CHECK(oracle_intersection(b24, gv("αβαα"), gv("βααβ"), 4, 4) == 0);
  const auto k24 = graph(kK, 2, 4);
  CHECK(oracle_intersection(k24, gv("αβαβ"), gv("βαβα"), 1, 2) == 1);
  for (const auto& v : k24.vertices) {
    for (const auto& w : successors(k24.params, v)) {
      for (int i = 2; i <= 4; ++i) {
        for (int j = 0; j < i - 1; ++j) CHECK(oracle_intersection(k24, v, w, i, j) == 0);
      }
    }
  }
  CHECK_THROWS_AS(oracle_intersection(k24, gv("αβαβ"), gv("αβαβ"), 1, 1), Error);
}

TEST_CASE("oracle input probabilities") {
  const auto k24 = graph(kK, 2, 4);
  CHECK(oracle_p_in(k24, 1) == BigRational(2, 23));
  BigRational total = 0;
  for (int i = 1; i <= 4; ++i) total += oracle_p_in(k24, i);
  CHECK(total == 1);
  // (3^5 - 3^3 - 3^2 + 1) / (3^5 + 3^4 - 3)
  CHECK(oracle_p_in(graph(kK, 3, 4), 4) == BigRational(208, 321));
}

TEST_CASE("oracle transition probabilities") {
  const auto k24 = graph(kK, 2, 4);
  CHECK(oracle_p_t(k24, 1, 2) == BigRational(1, 8));
  CHECK(oracle_p_t(k24, 1, 2, TransitionModel::kJoint) == BigRational(1, 4));
  CHECK(oracle_p_t(k24, 4, 4) == 1);
  CHECK(oracle_p_t(k24, 4, 4, TransitionModel::kJoint) == 1);
  const auto b24 = graph(kB, 2, 4);
  for (auto model : {TransitionModel::kFactorized, TransitionModel::kJoint}) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = i; j <= 4; ++j) {
        CHECK(oracle_p_t(b24, i, j, model) == rf_eval(p_t(kB, 4, i, j, Regime::concrete(2), model), 2));
      }
    }
  }
  // The factorized direct last column matches its closed form too.
  const auto m = all_pairs_distances(b24);
  for (int i = 1; i <= 4; ++i) {
    CHECK(oracle_p_t_row(b24, m, i, TransitionModel::kFactorized, true).back() ==
          rf_eval(p_t_last_column_direct(kB, 4, i, Regime::concrete(2)), 2));
  }
}

TEST_CASE("oracle mean distance") {
  const auto k34 = graph(kK, 3, 4);
  CHECK(oracle_mean_distance(k34, all_pairs_distances(k34)) == rf_eval(mean_distance(kK, 4), 3));
}

TEST_CASE("smallest grid graph verifies") {
  const auto s = verify_grid({kB}, {2}, {2});
  CHECK(s.ok());
  CHECK(s.checks > 0);
  CHECK(s.graphs == std::vector<std::string>{"B(2,2)"});
}

TEST_CASE("default grid verifies with zero mismatches") {
  const auto s = verify_grid({kB, kK}, {2, 3, 4}, {2, 3, 4, 5});
  CHECK(s.graphs.size() == 24);
  CHECK(s.mismatches == 0);
  if (!s.ok()) FAIL(to_json_lines(s).substr(0, 2000));
}

TEST_CASE("an off-by-one in the layer coefficients is detected") {
  VerifyOptions options;
  options.layer_formula = [](const GraphParams& p, const Vertex& v, int i) {
    LayerPolynomial layer = layer_star_poly(p, v, i);
    // Shift every coefficient a_k to a_{k+1}.
    std::map<int, int> moved;
    for (const auto& [k, c] : layer.sub) {
      if (k + 1 < i) moved[k + 1] = c;
    }
    layer.sub = moved;
    return layer;
  };
  const auto s = verify_grid({kK}, {2, 3}, {3, 4}, options);
  CHECK(s.mismatches > 0);
  CHECK_FALSE(s.reports.empty());
  CHECK(s.reports.front().quantity == "layer_count");
  const auto line = nlohmann::json::parse(to_json_lines(s).substr(0, to_json_lines(s).find('\n')));
  CHECK(line["match"] == false);
  CHECK(line["context"]["family"] == "K");
}

TEST_CASE("grid cap") {
  VerifyOptions options;
  options.cap = 10;
  try {
    verify_grid({kB}, {2}, {4}, options);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
}

TEST_CASE("packet walk simulation") {
  const auto k34 = graph(kK, 3, 4);
  const auto at_zero = simulate_packet_walks(k34, 0, 20000, 7);
  const double mean = to_double(rf_eval(mean_distance(kK, 4), 3));
  CHECK(std::abs(at_zero.mean - mean) < 5 * at_zero.std_error + 1e-12);

  const auto walk = simulate_packet_walks(k34, BigRational(1, 10), 100000, 11);
  const double chain = to_double(expected_hops(build_chain(kK, 3, 4, BigRational(1, 10))));
  CHECK(std::abs(walk.mean - chain) < 4 * walk.std_error);

  const auto again = simulate_packet_walks(k34, BigRational(1, 10), 1000, 11);
  const auto same = simulate_packet_walks(k34, BigRational(1, 10), 1000, 11);
  CHECK(again.mean == same.mean);
  CHECK_THROWS_AS(simulate_packet_walks(k34, 1, 10, 1), Error);
}
