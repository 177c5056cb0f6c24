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

// De Bruijn and Kautz digraphs in sequence representation: parameters,
// vertices, shift adjacency, closed-form distance and shortest paths, and a
// materialized digraph for small instances.

#ifndef LAYERSCOPE_ALPHABET_GRAPH_HPP_
#define LAYERSCOPE_ALPHABET_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "layerscope/error.hpp"

namespace layerscope {

enum class Family { kDeBruijn, kKautz };

constexpr char family_tag(Family family) {
  return family == Family::kDeBruijn ? 'B' : 'K';
}

inline Family parse_family(std::string_view text) {
  if (text == "B" || text == "b") return Family::kDeBruijn;
  if (text == "K" || text == "k") return Family::kKautz;
  throw Error(ErrorCode::kParse, "unknown family '" + std::string(text) + "'");
}

inline constexpr std::uint64_t kDefaultVertexCap = 200'000;

// Multiplies with saturation at UINT64_MAX; vertex counts are only compared
// against caps, so saturation is enough.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Graph family, degree d and diameter D. A symbolic instance leaves d
// unspecified and stands for "any d >= 3"; concrete instances pin d, which
// matters for the d = 2 special cases of the layer intersections.
class GraphParams {
 public:
  static GraphParams concrete(Family family, int degree, int diameter) {
    if (degree < 2) {
      throw Error(ErrorCode::kInvalidParams, "degree must be >= 2");
    }
    check_diameter(diameter);
    return GraphParams(family, degree, diameter);
  }

  static GraphParams symbolic(Family family, int diameter) {
    check_diameter(diameter);
    return GraphParams(family, std::nullopt, diameter);
  }

  Family family() const { return family_; }
  int diameter() const { return diameter_; }
  bool is_kautz() const { return family_ == Family::kKautz; }
  bool is_symbolic() const { return !degree_.has_value(); }
  bool degree_two() const { return degree_ == 2; }

  int degree() const {
    if (!degree_) {
      throw Error(ErrorCode::kInvalidParams,
                  "operation needs a concrete degree");
    }
    return *degree_;
  }

  std::optional<int> alphabet_size() const {
    if (!degree_) return std::nullopt;
    return is_kautz() ? *degree_ + 1 : *degree_;
  }

  // d^D for De Bruijn, d^D + d^(D-1) for Kautz.
  std::uint64_t vertex_count() const {
    const auto d = static_cast<std::uint64_t>(degree());
    std::uint64_t tail = 1;
    for (int k = 0; k + 1 < diameter_; ++k) tail = saturating_mul(tail, d);
    const std::uint64_t full = saturating_mul(tail, d);
    if (!is_kautz()) return full;
    return full > std::numeric_limits<std::uint64_t>::max() - tail
               ? std::numeric_limits<std::uint64_t>::max()
               : full + tail;
  }

  bool operator==(const GraphParams&) const = default;

 private:
  GraphParams(Family family, std::optional<int> degree, int diameter)
      : family_(family), degree_(degree), diameter_(diameter) {}

  static void check_diameter(int diameter) {
    if (diameter < 1) {
      throw Error(ErrorCode::kInvalidParams, "diameter must be >= 1");
    }
  }

  Family family_;
  std::optional<int> degree_;
  int diameter_;
};

// A vertex v = v_1 v_2 ... v_D. Positions are 1-based in the accessors below
// so that index arithmetic reads like the sequence notation v_[a,b].
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> symbols) : symbols_(std::move(symbols)) {}

  std::span<const int> symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  int at(int position) const { return symbols_[position - 1]; }
  int back() const { return symbols_.back(); }

  // v_[first, last]; empty when first > last.
  std::span<const int> segment(int first, int last) const {
    if (first > last) return {};
    return std::span<const int>(symbols_).subspan(first - 1, last - first + 1);
  }

  auto operator<=>(const Vertex&) const = default;

 private:
  std::vector<int> symbols_;
};

inline bool same_sequence(std::span<const int> a, std::span<const int> b) {
  return std::ranges::equal(a, b);
}

inline Vertex validate_vertex(const GraphParams& params,
                              std::span<const int> raw) {
  if (static_cast<int>(raw.size()) != params.diameter()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(params.diameter()) +
                    " symbols, got " + std::to_string(raw.size()));
  }
  const auto alphabet = params.alphabet_size();
  for (int s : raw) {
    if (s < 0 || (alphabet && s >= *alphabet)) {
      throw Error(ErrorCode::kSymbolOutOfRange,
                  "symbol " + std::to_string(s) + " outside the alphabet");
    }
  }
  if (params.is_kautz()) {
    for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
      if (raw[k] == raw[k + 1]) {
        throw Error(ErrorCode::kKautzRepeat,
                    "consecutive symbols at positions " +
                        std::to_string(k + 1) + " and " +
                        std::to_string(k + 2) + " are equal");
      }
    }
  }
  return Vertex(std::vector<int>(raw.begin(), raw.end()));
}

// v_2 ... v_D x for every admissible x, in ascending order of x.
inline std::vector<Vertex> successors(const GraphParams& params,
                                      const Vertex& v) {
  const int alphabet = params.alphabet_size().value_or(0);
  if (params.is_symbolic()) {
    throw Error(ErrorCode::kInvalidParams, "successors need a concrete degree");
  }
  std::vector<Vertex> out;
  out.reserve(params.degree());
  const auto tail = v.segment(2, v.size());
  for (int x = 0; x < alphabet; ++x) {
    if (params.is_kautz() && x == v.back()) continue;
    std::vector<int> symbols(tail.begin(), tail.end());
    symbols.push_back(x);
    out.emplace_back(std::move(symbols));
  }
  return out;
}

// True iff w = v_2 ... v_D x for an admissible x.
inline bool is_successor(const GraphParams& params, const Vertex& v,
                         const Vertex& w) {
  const int D = params.diameter();
  if (v.size() != D || w.size() != D) return false;
  if (!same_sequence(v.segment(2, D), w.segment(1, D - 1))) return false;
  return !(params.is_kautz() && w.back() == v.back());
}

// Smallest k such that the last D - k symbols of v are the first D - k
// symbols of z. k = D is always admissible.
inline int distance(const GraphParams& params, const Vertex& v,
                    const Vertex& z) {
  const int D = params.diameter();
  for (int k = 0; k < D; ++k) {
    if (same_sequence(v.segment(k + 1, D), z.segment(1, D - k))) return k;
  }
  return D;
}

// The unique shortest path v, u_1, ..., u_{k-1}, z where
// u_i = v_{i+1} ... v_k z_1 ... z_{D-k+i}.
inline std::vector<Vertex> shortest_path(const GraphParams& params,
                                         const Vertex& v, const Vertex& z) {
  if (v == z) throw Error(ErrorCode::kSameVertex, "path endpoints coincide");
  const int D = params.diameter();
  const int k = distance(params, v, z);
  std::vector<Vertex> path{v};
  for (int i = 1; i < k; ++i) {
    std::vector<int> symbols;
    symbols.reserve(D);
    for (int t = i + 1; t <= k; ++t) symbols.push_back(v.at(t));
    for (int t = 1; t <= D - k + i; ++t) symbols.push_back(z.at(t));
    path.emplace_back(std::move(symbols));
  }
  path.push_back(z);
  return path;
}

// Vertex strings: plain digits when every symbol fits in one character
// (alphabet size <= 10), dot-separated otherwise.
inline std::string format_vertex(const Vertex& v,
                                 std::optional<int> alphabet_size = {}) {
  bool dotted = alphabet_size ? *alphabet_size > 10 : false;
  if (!alphabet_size) {
    dotted = std::ranges::any_of(v.symbols(), [](int s) { return s >= 10; });
  }
  std::string out;
  for (int k = 0; k < v.size(); ++k) {
    if (dotted && k > 0) out += '.';
    out += std::to_string(v.symbols()[k]);
  }
  return out;
}

inline std::vector<int> parse_symbols(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw Error(ErrorCode::kParse, "empty vertex string");
  const bool dotted = text.find('.') != std::string_view::npos;
  if (!dotted) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::kParse,
                    "bad symbol '" + std::string(1, c) + "' in vertex");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('.', start), text.size());
    const auto piece = text.substr(start, stop - start);
    if (piece.empty() || piece.size() > 9 ||
        !std::ranges::all_of(piece, [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::kParse,
                  "bad symbol '" + std::string(piece) + "' in vertex");
    }
    out.push_back(std::stoi(std::string(piece)));
    start = stop + 1;
  }
  return out;
}

inline Vertex parse_vertex(const GraphParams& params, std::string_view text) {
  return validate_vertex(params, parse_symbols(text));
}

// Materialized digraph for brute-force checks. Vertices are stored in
// lexicographic order, adjacency as vertex indices in successor order.
struct ExplicitDigraph {
  GraphParams params;
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(vertices.size()); }

  std::optional<int> index_of(const Vertex& v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - vertices.begin());
  }
};

inline ExplicitDigraph build_explicit(
    const GraphParams& params, std::uint64_t max_vertices = kDefaultVertexCap) {
  const std::uint64_t count = params.vertex_count();
  if (count > max_vertices) {
    throw Error(ErrorCode::kTooLarge,
                std::string(1, family_tag(params.family())) + "(" +
                    std::to_string(params.degree()) + "," +
                    std::to_string(params.diameter()) + ") has " +
                    std::to_string(count) + " vertices, cap is " +
                    std::to_string(max_vertices));
  }
  const int D = params.diameter();
  const int alphabet = *params.alphabet_size();
  ExplicitDigraph g{params, {}, {}};
  g.vertices.reserve(count);

  // Odometer over words of length D, skipping Kautz-invalid ones.
  std::vector<int> word(D, 0);
  while (true) {
    bool ok = true;
    if (params.is_kautz()) {
      for (int k = 0; k + 1 < D && ok; ++k) ok = word[k] != word[k + 1];
    }
    if (ok) g.vertices.emplace_back(word);
    int pos = D - 1;
    while (pos >= 0 && word[pos] == alphabet - 1) word[pos--] = 0;
    if (pos < 0) break;
    ++word[pos];
  }

  g.succ.resize(g.vertices.size());
  for (std::size_t n = 0; n < g.vertices.size(); ++n) {
    for (const Vertex& w : successors(params, g.vertices[n])) {
      g.succ[n].push_back(*g.index_of(w));
    }
  }
  return g;
}

// Breadth-first distances from one source, indexed like g.vertices.
inline std::vector<int> bfs_distances(const ExplicitDigraph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.succ[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// S_0*(v), ..., S_D*(v) by breadth-first search; each layer sorted.
inline std::vector<std::vector<Vertex>> bfs_layers(const ExplicitDigraph& g,
                                                   const Vertex& v) {
  const auto source = g.index_of(v);
  if (!source) {
    throw Error(ErrorCode::kVertexNotInGraph,
                "vertex " + format_vertex(v) + " is not in the graph");
  }
  const auto dist = bfs_distances(g, *source);
  std::vector<std::vector<Vertex>> layers(g.params.diameter() + 1);
  for (int n = 0; n < g.size(); ++n) {
    if (dist[n] >= 0) layers[dist[n]].push_back(g.vertices[n]);
  }
  return layers;
}

}  // namespace layerscope

#endif  // LAYERSCOPE_ALPHABET_GRAPH_HPP_
