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

#include <future>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include "layerscope/alphabet_graph.hpp"
#include "test_support.hpp"

using namespace layerscope;
using layerscope::testing::default_grid;
using layerscope::testing::gv;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParse;
}

}  // namespace

TEST_CASE("params enforce degree and diameter bounds") {
  CHECK(code_of([] { GraphParams::concrete(Family::kKautz, 1, 3); }) == ErrorCode::kInvalidParams);
  CHECK(code_of([] { GraphParams::concrete(Family::kKautz, 2, 0); }) == ErrorCode::kInvalidParams);
  CHECK(GraphParams::concrete(Family::kDeBruijn, 3, 2).alphabet_size() == 3);
  CHECK(GraphParams::concrete(Family::kKautz, 3, 2).alphabet_size() == 4);
  CHECK_FALSE(GraphParams::symbolic(Family::kKautz, 4).alphabet_size().has_value());
  CHECK(code_of([] { (void)GraphParams::symbolic(Family::kKautz, 4).degree(); }) ==
        ErrorCode::kInvalidParams);
}

TEST_CASE("validate_vertex") {
  const auto k24 = GraphParams::concrete(Family::kKautz, 2, 4);
  const auto b24 = GraphParams::concrete(Family::kDeBruijn, 2, 4);
  CHECK(validate_vertex(k24, std::vector{0, 1, 0, 1}) == gv("αβαβ"));
  CHECK(code_of([&] { validate_vertex(k24, std::vector{0, 0, 1, 0}); }) == ErrorCode::kKautzRepeat);
  CHECK(validate_vertex(b24, std::vector{0, 0, 1, 0}) == gv("ααβα"));
  CHECK(code_of([&] { validate_vertex(k24, std::vector{0, 1, 0}); }) == ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { validate_vertex(k24, std::vector{0, 1, 0, 3}); }) ==
        ErrorCode::kSymbolOutOfRange);
  CHECK(code_of([&] { validate_vertex(b24, std::vector{0, 1, 0, 2}); }) ==
        ErrorCode::kSymbolOutOfRange);
  CHECK(code_of([&] { validate_vertex(b24, std::vector{0, -1, 0, 1}); }) ==
        ErrorCode::kSymbolOutOfRange);
}

TEST_CASE("successors follow the shift rule in ascending order") {
  const auto b23 = GraphParams::concrete(Family::kDeBruijn, 2, 3);
  CHECK(successors(b23, gv("αβα")) == std::vector{gv("βαα"), gv("βαβ")});
  const auto k24 = GraphParams::concrete(Family::kKautz, 2, 4);
  CHECK(successors(k24, gv("αβαβ")) == std::vector{gv("βαβα"), gv("βαβγ")});

  for (const auto& c : default_grid()) {
    const auto params = GraphParams::concrete(c.family, c.d, c.D);
    const auto g = build_explicit(params);
    for (const auto& v : g.vertices) {
      const auto s = successors(params, v);
      REQUIRE(static_cast<int>(s.size()) == c.d);
      CHECK(std::set<Vertex>(s.begin(), s.end()).size() == s.size());
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (const auto& w : s) {
        CHECK(is_successor(params, v, w));
        if (c.family == Family::kKautz) CHECK(w.back() != v.back());
      }
    }
  }
}

TEST_CASE("distance examples") {
  const auto b23 = GraphParams::concrete(Family::kDeBruijn, 2, 3);
  CHECK(distance(b23, gv("ααα"), gv("ααβ")) == 1);
  CHECK(distance(b23, gv("αβα"), gv("αβα")) == 0);
  CHECK(distance(b23, gv("ααα"), gv("βββ")) == 3);
}

TEST_CASE("overlap distance equals BFS distance on the whole grid") {
  for (const auto& c : default_grid()) {
    const auto params = GraphParams::concrete(c.family, c.d, c.D);
    const auto g = build_explicit(params);
    int mismatches = 0;
    for (int s = 0; s < g.size(); ++s) {
      const auto dist = bfs_distances(g, s);
      for (int t = 0; t < g.size(); ++t) {
        if (distance(params, g.vertices[s], g.vertices[t]) != dist[t]) ++mismatches;
      }
    }
    INFO(layerscope::testing::grid_name(c));
    CHECK(mismatches == 0);
  }
}

TEST_CASE("shortest paths are arc sequences of BFS length") {
  for (const auto& c : default_grid()) {
    if (c.d > 3 || c.D > 4) continue;
    const auto params = GraphParams::concrete(c.family, c.d, c.D);
    const auto g = build_explicit(params);
    for (int s = 0; s < g.size(); ++s) {
      const auto dist = bfs_distances(g, s);
      for (int t = 0; t < g.size(); ++t) {
        if (s == t) continue;
        const auto path = shortest_path(params, g.vertices[s], g.vertices[t]);
        REQUIRE(static_cast<int>(path.size()) - 1 == dist[t]);
        CHECK(path.front() == g.vertices[s]);
        CHECK(path.back() == g.vertices[t]);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          CHECK(is_successor(params, path[k], path[k + 1]));
          CHECK(g.index_of(path[k]).has_value());
        }
      }
    }
  }
  const auto k24 = GraphParams::concrete(Family::kKautz, 2, 4);
  CHECK(shortest_path(k24, gv("αβαβ"), gv("βαβα")) == std::vector{gv("αβαβ"), gv("βαβα")});
  CHECK(code_of([&] { shortest_path(k24, gv("αβαβ"), gv("αβαβ")); }) == ErrorCode::kSameVertex);
}

TEST_CASE("build_explicit vertex counts and cap") {
  CHECK(build_explicit(GraphParams::concrete(Family::kDeBruijn, 2, 3)).size() == 8);
  CHECK(build_explicit(GraphParams::concrete(Family::kKautz, 2, 4)).size() == 24);
  CHECK(build_explicit(GraphParams::concrete(Family::kKautz, 3, 2)).size() == 12);
  for (const auto& c : default_grid()) {
    const auto params = GraphParams::concrete(c.family, c.d, c.D);
    const auto g = build_explicit(params);
    CHECK(static_cast<std::uint64_t>(g.size()) == params.vertex_count());
    CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    for (const auto& adj : g.succ) CHECK(static_cast<int>(adj.size()) == c.d);
  }
  CHECK(code_of([] { build_explicit(GraphParams::concrete(Family::kDeBruijn, 2, 4), 10); }) ==
        ErrorCode::kTooLarge);
  CHECK(code_of([] { build_explicit(GraphParams::concrete(Family::kDeBruijn, 10, 10)); }) ==
        ErrorCode::kTooLarge);
}

TEST_CASE("bfs_layers partition the vertex set") {
  const auto params = GraphParams::concrete(Family::kKautz, 3, 3);
  const auto g = build_explicit(params);
  for (const auto& v : g.vertices) {
    const auto layers = bfs_layers(g, v);
    REQUIRE(layers.size() == 4);
    CHECK(layers[0] == std::vector{v});
    std::size_t total = 0;
    for (const auto& layer : layers) total += layer.size();
    CHECK(static_cast<int>(total) == g.size());
  }
  CHECK(code_of([&] { bfs_layers(g, gv("αααα")); }) == ErrorCode::kVertexNotInGraph);
}

TEST_CASE("vertex text round trip") {
  const auto k24 = GraphParams::concrete(Family::kKautz, 2, 4);
  CHECK(format_vertex(gv("αβαγ"), 3) == "0102");
  CHECK(parse_vertex(k24, "0102") == gv("αβαγ"));
  const auto k10 = GraphParams::concrete(Family::kKautz, 10, 4);
  const Vertex wide(std::vector<int>{0, 1, 10, 2});
  CHECK(format_vertex(wide, 11) == "0.1.10.2");
  CHECK(parse_vertex(k10, "0.1.10.2") == wide);
  CHECK(format_vertex(wide) == "0.1.10.2");
  CHECK(code_of([&] { parse_vertex(k24, "01x2"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse_vertex(k10, "0..1"); }) == ErrorCode::kParse);
  CHECK(family_tag(Family::kDeBruijn) == 'B');
  CHECK(parse_family("K") == Family::kKautz);
  CHECK(code_of([] { parse_family("X"); }) == ErrorCode::kParse);
}

TEST_CASE("concurrent readers see sequential results") {
  const auto params = GraphParams::concrete(Family::kKautz, 3, 4);
  const auto g = build_explicit(params);
  auto work = [&] {
    long long sum = 0;
    for (const auto& v : g.vertices) {
      for (const auto& z : g.vertices) sum += distance(params, v, z);
    }
    return sum;
  };
  const long long expected = work();
  std::vector<std::future<long long>> jobs;
  for (int t = 0; t < 4; ++t) jobs.push_back(std::async(std::launch::async, work));
  for (auto& j : jobs) CHECK(j.get() == expected);
}
