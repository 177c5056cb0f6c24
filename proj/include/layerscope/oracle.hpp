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

// Brute-force ground truth. The oracle_* functions work from breadth-first
// search on a materialized digraph and nothing else; verify_grid compares
// them with the closed forms.

#ifndef LAYERSCOPE_ORACLE_HPP_
#define LAYERSCOPE_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "layerscope/alphabet_graph.hpp"
#include "layerscope/class_partition.hpp"
#include "layerscope/error.hpp"
#include "layerscope/layer_algebra.hpp"
#include "layerscope/poly_rational.hpp"
#include "layerscope/probabilities.hpp"

namespace layerscope {

// dist[s * n + t] = BFS distance from vertex s to vertex t.
struct DistanceMatrix {
  int n = 0;
  std::vector<std::uint8_t> dist;

  int at(int s, int t) const { return dist[static_cast<std::size_t>(s) * n + t]; }
};

inline DistanceMatrix all_pairs_distances(const ExplicitDigraph& g) {
  DistanceMatrix m{g.size(), {}};
  m.dist.resize(static_cast<std::size_t>(g.size()) * g.size());
  for (int s = 0; s < g.size(); ++s) {
    const auto row = bfs_distances(g, s);
    for (int t = 0; t < g.size(); ++t) m.dist[static_cast<std::size_t>(s) * g.size() + t] = row[t];
  }
  return m;
}

namespace detail {

inline int index_or_throw(const ExplicitDigraph& g, const Vertex& v) {
  const auto n = g.index_of(v);
  if (!n) throw Error(ErrorCode::kVertexNotInGraph, format_vertex(v) + " is not in the graph");
  return *n;
}

}  // namespace detail

inline std::vector<std::uint64_t> oracle_layer_counts(const ExplicitDigraph& g, const Vertex& v) {
  std::vector<std::uint64_t> out(g.params.diameter() + 1, 0);
  for (int d : bfs_distances(g, detail::index_or_throw(g, v))) ++out[d];
  return out;
}

// |S_i*(v) ∩ S_j*(w)| by intersecting BFS layers.
inline std::uint64_t oracle_intersection(const ExplicitDigraph& g, const Vertex& v, const Vertex& w,
                                         int i, int j) {
  const int s = detail::index_or_throw(g, v);
  const int t = detail::index_or_throw(g, w);
  if (std::find(g.succ[s].begin(), g.succ[s].end(), t) == g.succ[s].end()) {
    throw Error(ErrorCode::kNotASuccessor, format_vertex(w) + " is not a successor of " + format_vertex(v));
  }
  const auto dv = bfs_distances(g, s);
  const auto dw = bfs_distances(g, t);
  std::uint64_t count = 0;
  for (int z = 0; z < g.size(); ++z) count += (dv[z] == i && dw[z] == j);
  return count;
}

inline BigRational oracle_p_in(const ExplicitDigraph& g, const DistanceMatrix& m, int i) {
  std::uint64_t pairs = 0;
  for (std::size_t k = 0; k < m.dist.size(); ++k) pairs += m.dist[k] == i;
  const BigInt n = g.size();
  return BigRational(BigInt(pairs), n * (n - 1));
}

inline BigRational oracle_p_in(const ExplicitDigraph& g, int i) {
  return oracle_p_in(g, all_pairs_distances(g), i);
}

// Transition row i (entries j = i..D) by enumeration over every vertex v,
// every destination z at distance i and every deflection neighbor w.
//
// kJoint: (1/|V|) sum_v (1/|S_i*(v)|) sum_z (1/(d-1)) #{w != w'(v,z) : d(w,z) = j},
// w'(v,z) being the next vertex on the shortest path from v to z.
// kFactorized: (1/|V|) sum_v sum_w (1/(d-1)) (c_j / L)(1 - c_{i-1} / L) with
// c_j = |S_i*(v) ∩ S_j*(w)| and L = |S_i*(v)|; the last entry is the
// complement of the others, or the same sum when `direct_last` is set.
inline std::vector<BigRational> oracle_p_t_row(const ExplicitDigraph& g, const DistanceMatrix& m,
                                               int i, TransitionModel model,
                                               bool direct_last = false) {
  const int D = g.params.diameter();
  const int d = g.params.degree();
  if (i < 1 || i > D) throw Error(ErrorCode::kInvalidRange, "need 1 <= i <= D");
  std::vector<BigRational> row(D - i + 1, BigRational(0));
  for (int v = 0; v < g.size(); ++v) {
    std::uint64_t layer = 0;
    for (int z = 0; z < g.size(); ++z) layer += m.at(v, z) == i;
    std::vector<std::uint64_t> hits(D + 1, 0);
    if (model == TransitionModel::kJoint) {
      for (int z = 0; z < g.size(); ++z) {
        if (m.at(v, z) != i) continue;
        for (int w : g.succ[v]) {
          if (m.at(w, z) == i - 1) continue;  // the shortest-path successor
          ++hits[m.at(w, z)];
        }
      }
      for (int j = i; j <= D; ++j) {
        row[j - i] += BigRational(BigInt(hits[j]), BigInt(layer) * (d - 1));
      }
      continue;
    }
    for (int w : g.succ[v]) {
      std::vector<std::uint64_t> c(D + 1, 0);
      for (int z = 0; z < g.size(); ++z) {
        if (m.at(v, z) == i) ++c[m.at(w, z)];
      }
      const BigRational stay = 1 - BigRational(BigInt(c[i - 1]), BigInt(layer));
      for (int j = i; j <= D; ++j) {
        row[j - i] += BigRational(BigInt(c[j]), BigInt(layer) * (d - 1)) * stay;
      }
    }
  }
  for (auto& x : row) x /= g.size();
  if (model == TransitionModel::kFactorized && !direct_last) {
    BigRational rest = 1;
    for (std::size_t k = 0; k + 1 < row.size(); ++k) rest -= row[k];
    row.back() = rest;
  }
  return row;
}

inline BigRational oracle_p_t(const ExplicitDigraph& g, int i, int j,
                              TransitionModel model = TransitionModel::kFactorized) {
  if (i < 1 || j < i || j > g.params.diameter()) {
    throw Error(ErrorCode::kInvalidRange, "need 1 <= i <= j <= D");
  }
  return oracle_p_t_row(g, all_pairs_distances(g), i, model)[j - i];
}

inline BigRational oracle_mean_distance(const ExplicitDigraph& g, const DistanceMatrix& m) {
  BigInt total = 0;
  for (auto x : m.dist) total += x;
  const BigInt n = g.size();
  return BigRational(total, n * (n - 1));
}

// Class sizes by grouping vertices on their first-occurrence renaming.
inline std::map<std::vector<int>, std::uint64_t> oracle_class_sizes(const ExplicitDigraph& g) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& v : g.vertices) {
    std::map<int, int> rename;
    std::vector<int> code;
    for (int x : v.symbols()) code.push_back(rename.try_emplace(x, static_cast<int>(rename.size())).first->second);
    ++out[code];
  }
  return out;
}

struct MonteCarloResult {
  double mean = 0;
  double std_error = 0;
  std::uint64_t packets = 0;
};

// Packets between uniform ordered pairs of distinct vertices. At every hop
// the packet takes its shortest-path arc with probability 1 - p and is
// otherwise sent down one of the other d - 1 arcs uniformly.
inline MonteCarloResult simulate_packet_walks(const ExplicitDigraph& g, const BigRational& p,
                                              std::uint64_t packets, std::uint64_t seed) {
  if (p < 0 || p > 1) throw Error(ErrorCode::kInvalidParams, "deflection probability must lie in [0, 1]");
  if (p == 1) throw Error(ErrorCode::kDiverges, "with p = 1 the packet never reaches its destination");
  if (packets == 0) throw Error(ErrorCode::kInvalidParams, "need at least one packet");
  const BigInt pden = boost::multiprecision::denominator(p);
  if (pden > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kInvalidParams, "deflection probability denominator is too large");
  }
  const auto num = boost::multiprecision::numerator(p).convert_to<std::uint64_t>();
  const auto den = pden.convert_to<std::uint64_t>();
  const DistanceMatrix m = all_pairs_distances(g);
  const int d = g.params.degree();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, g.size() - 1);
  std::uniform_int_distribution<int> pick_other(0, g.size() - 2);
  std::uniform_int_distribution<std::uint64_t> coin(0, den - 1);
  std::uniform_int_distribution<int> pick_arc(0, d - 2);

  double sum = 0, sum_sq = 0;
  for (std::uint64_t k = 0; k < packets; ++k) {
    const int source = pick_vertex(rng);
    int dest = pick_other(rng);
    if (dest >= source) ++dest;
    int u = source;
    std::uint64_t hops = 0;
    while (u != dest) {
      const auto& out = g.succ[u];
      int best = 0;
      while (m.at(out[best], dest) + 1 != m.at(u, dest)) ++best;
      if (coin(rng) < num) {
        int other = pick_arc(rng);
        if (other >= best) ++other;
        u = out[other];
      } else {
        u = out[best];
      }
      ++hops;
    }
    sum += static_cast<double>(hops);
    sum_sq += static_cast<double>(hops) * static_cast<double>(hops);
  }
  MonteCarloResult r;
  r.packets = packets;
  r.mean = sum / static_cast<double>(packets);
  const double var = packets > 1 ? (sum_sq - sum * r.mean) / static_cast<double>(packets - 1) : 0.0;
  r.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(packets));
  return r;
}

// One formula-versus-oracle comparison.
struct OracleReport {
  std::string quantity;
  std::string formula;
  std::string oracle;
  bool match = false;
  nlohmann::json context;
};

inline nlohmann::json to_json(const OracleReport& r) {
  return {{"quantity", r.quantity}, {"formula", r.formula}, {"oracle", r.oracle},
          {"match", r.match},       {"context", r.context}};
}

using LayerFormula = std::function<LayerPolynomial(const GraphParams&, const Vertex&, int)>;

struct VerifyOptions {
  std::uint64_t cap = kDefaultVertexCap;
  // The layer polynomial under test; replaceable for detector sanity checks.
  LayerFormula layer_formula = [](const GraphParams& p, const Vertex& v, int i) {
    return layer_star_poly(p, v, i);
  };
  bool keep_matches = false;
};

struct VerifySummary {
  std::vector<std::string> graphs;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::vector<OracleReport> reports;  // mismatches, plus matches when asked

  bool ok() const { return mismatches == 0; }
};

namespace detail {

class Recorder {
 public:
  Recorder(VerifySummary& summary, const VerifyOptions& options, nlohmann::json graph)
      : summary_(summary), options_(options), graph_(std::move(graph)) {}

  template <typename A, typename B>
  void check(const std::string& quantity, const A& formula, const B& oracle, nlohmann::json context) {
    const bool match = formula == oracle;
    ++summary_.checks;
    if (!match) ++summary_.mismatches;
    if (match && !options_.keep_matches) return;
    for (auto& [k, v] : graph_.items()) context[k] = v;
    summary_.reports.push_back({quantity, text(formula), text(oracle), match, std::move(context)});
  }

 private:
  static std::string text(const BigRational& x) { return to_string(x); }
  static std::string text(const BigInt& x) { return x.str(); }
  static std::string text(std::uint64_t x) { return std::to_string(x); }
  static std::string text(const std::optional<int>& x) { return x ? std::to_string(*x) : "none"; }

  VerifySummary& summary_;
  const VerifyOptions& options_;
  nlohmann::json graph_;
};

}  // namespace detail

// Every closed-form quantity of one concrete graph against the oracle.
inline void verify_graph(const GraphParams& params, const VerifyOptions& options, VerifySummary& summary) {
  const ExplicitDigraph g = build_explicit(params, options.cap);
  const DistanceMatrix m = all_pairs_distances(g);
  const int D = params.diameter();
  const int d = params.degree();
  const auto alphabet = params.alphabet_size();
  const std::string name = std::string(1, family_tag(params.family())) + "(" + std::to_string(d) + "," +
                           std::to_string(D) + ")";
  summary.graphs.push_back(name);
  detail::Recorder rec(summary, options, {{"family", std::string(1, family_tag(params.family()))}, {"d", d}, {"D", D}});

  rec.check("vertex_count", vertex_count_poly(params.family(), D).eval(d), BigInt(g.size()), {});

  for (int s = 0; s < g.size(); ++s) {
    const Vertex& v = g.vertices[s];
    const std::string vs = format_vertex(v, alphabet);
    std::vector<std::uint64_t> counts(D + 1, 0);
    for (int t = 0; t < g.size(); ++t) ++counts[m.at(s, t)];
    for (int i = 0; i <= D; ++i) {
      rec.check("layer_count", options.layer_formula(params, v, i).eval(d), BigInt(counts[i]),
                {{"v", vs}, {"i", i}});
    }
    for (int wn : g.succ[s]) {
      const Vertex& w = g.vertices[wn];
      const std::string ws = format_vertex(w, alphabet);
      for (int i = 1; i <= D; ++i) {
        std::vector<std::uint64_t> inter(D + 1, 0);
        for (int t = 0; t < g.size(); ++t) {
          if (m.at(s, t) == i) ++inter[m.at(wn, t)];
        }
        std::optional<int> j_oracle;
        for (int j = i; j <= D; ++j) {
          if (inter[j] > 0 && !j_oracle) j_oracle = j;
        }
        rec.check("j0", unique_j0(params, v, w, i), j_oracle, {{"v", vs}, {"w", ws}, {"i", i}});
        const auto r = intersection_report(params, v, w, i);
        for (int j = 0; j <= D; ++j) {
          BigInt formula = 0;
          if (j == i - 1 && r.back) formula = r.back->eval(d);
          if (r.forward && r.forward_j == j) formula = r.forward->eval(d);
          rec.check("intersection", formula, BigInt(inter[j]), {{"v", vs}, {"w", ws}, {"i", i}, {"j", j}});
        }
      }
    }
  }

  const auto sizes = oracle_class_sizes(g);
  for (const auto& c : enumerate_classes(params.family(), D)) {
    const auto it = sizes.find(c.pattern.code);
    rec.check("class_cardinality", c.cardinality.eval(d), BigInt(it == sizes.end() ? 0 : it->second),
              {{"pattern", format_pattern(c.pattern)}});
  }

  for (int i = 1; i <= D; ++i) {
    rec.check("p_in", rf_eval(p_in(params.family(), D, i), d), oracle_p_in(g, m, i), {{"i", i}});
  }
  const Regime regime = Regime::concrete(d);
  for (TransitionModel model : {TransitionModel::kFactorized, TransitionModel::kJoint}) {
    for (int i = 1; i <= D; ++i) {
      const auto formula = p_t_row(params.family(), D, i, regime, model);
      const auto oracle = oracle_p_t_row(g, m, i, model);
      for (int j = i; j <= D; ++j) {
        rec.check("p_t", rf_eval(formula[j - i], d), oracle[j - i],
                  {{"i", i}, {"j", j}, {"model", std::string(model_name(model))}});
      }
    }
  }
  rec.check("mean_distance", rf_eval(mean_distance(params.family(), D), d), oracle_mean_distance(g, m), {});
}

// Runs verify_graph over the product of the given ranges. Every graph is
// checked against the cap before any work starts.
inline VerifySummary verify_grid(const std::vector<Family>& families, const std::vector<int>& degrees,
                                 const std::vector<int>& diameters, const VerifyOptions& options = {}) {
  std::vector<GraphParams> graphs;
  for (Family f : families) {
    for (int d : degrees) {
      for (int D : diameters) {
        const auto params = GraphParams::concrete(f, d, D);
        if (params.vertex_count() > options.cap) {
          throw Error(ErrorCode::kTooLarge,
                      std::string(1, family_tag(f)) + "(" + std::to_string(d) + "," + std::to_string(D) +
                          ") has " + std::to_string(params.vertex_count()) + " vertices, cap is " +
                          std::to_string(options.cap));
        }
        graphs.push_back(params);
      }
    }
  }
  VerifySummary summary;
  for (const auto& params : graphs) verify_graph(params, options, summary);
  return summary;
}

inline std::string to_json_lines(const VerifySummary& summary) {
  std::ostringstream os;
  for (const auto& r : summary.reports) os << to_json(r).dump() << "\n";
  return os.str();
}

}  // namespace layerscope

#endif  // LAYERSCOPE_ORACLE_HPP_
