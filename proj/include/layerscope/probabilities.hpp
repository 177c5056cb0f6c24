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

// Input and transition probabilities of deflection routing as rational
// functions of d, summed class by class, plus a small absorbing chain.
//
// Two transition models are provided. kFactorized multiplies the share of
// S_i*(v) that lands at distance j from the deflection neighbor by the share
// that does not fall back to i - 1; its last column is the complement of the
// others. kJoint is the exact probability that a packet at distance i,
// deflected uniformly onto one of the d - 1 non-shortest arcs, lands at
// distance j.

#ifndef LAYERSCOPE_PROBABILITIES_HPP_
#define LAYERSCOPE_PROBABILITIES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "layerscope/alphabet_graph.hpp"
#include "layerscope/class_partition.hpp"
#include "layerscope/error.hpp"
#include "layerscope/layer_algebra.hpp"
#include "layerscope/poly_rational.hpp"

namespace layerscope {

enum class RegimeKind { kSymbolicDGe3, kSymbolicAllD, kConcrete };

struct Regime {
  RegimeKind kind = RegimeKind::kSymbolicDGe3;
  int d = 0;

  static Regime generic() { return {RegimeKind::kSymbolicDGe3, 0}; }
  static Regime all_d() { return {RegimeKind::kSymbolicAllD, 0}; }
  static Regime concrete(int d) {
    if (d < 2) throw Error(ErrorCode::kInvalidParams, "degree must be >= 2");
    return {RegimeKind::kConcrete, d};
  }

  bool is_concrete() const { return kind == RegimeKind::kConcrete; }

  std::string tag() const {
    switch (kind) {
      case RegimeKind::kSymbolicDGe3: return "d >= 3";
      case RegimeKind::kSymbolicAllD: return "d >= 2";
      case RegimeKind::kConcrete: return "d = " + std::to_string(d);
    }
    return "";
  }

  bool operator==(const Regime&) const = default;
};

enum class TransitionModel { kFactorized, kJoint };

constexpr std::string_view model_name(TransitionModel m) {
  return m == TransitionModel::kFactorized ? "factorized" : "joint";
}

inline TransitionModel parse_model(std::string_view text) {
  if (text == "factorized") return TransitionModel::kFactorized;
  if (text == "joint") return TransitionModel::kJoint;
  throw Error(ErrorCode::kParse, "unknown transition model '" + std::string(text) + "'");
}

// |V| as a polynomial in d.
inline IntPolynomial vertex_count_poly(Family family, int D) {
  return family == Family::kKautz ? d_pow(D) + d_pow(D - 1) : d_pow(D);
}

namespace detail {

inline GraphParams regime_params(Family family, int D, const Regime& regime) {
  return regime.is_concrete() ? GraphParams::concrete(family, regime.d, D)
                              : GraphParams::symbolic(family, D);
}

// The pattern read as a vertex. Symbol ranges are not checked: at a
// concrete d a class may need more symbols than exist, and then its
// cardinality vanishes there.
inline Vertex pattern_vertex(const VertexClass& c) { return Vertex(c.pattern.code); }

inline void check_pair(int D, int i, int j) {
  if (i < 1 || j < i || j > D) {
    throw Error(ErrorCode::kInvalidRange, "need 1 <= i <= j <= D, got i=" + std::to_string(i) +
                                              " j=" + std::to_string(j) + " D=" + std::to_string(D));
  }
}

inline void check_input_index(int D, int i) {
  if (i < 1 || i > D) {
    throw Error(ErrorCode::kInvalidRange,
                "need 1 <= i <= D, got i=" + std::to_string(i) + " D=" + std::to_string(D));
  }
}

// Contribution of one deflection neighbor w to P_t(i, j | v).
inline RationalFunction neighbor_term(const GraphParams& params, const Vertex& v, const Vertex& w,
                                      int i, int j, TransitionModel model) {
  const IntersectionReport r = intersection_report(params, v, w, i);
  if (!r.forward || r.forward_j != j) return {};
  const IntPolynomial layer = layer_star_poly(params, v, i).to_poly();
  const IntPolynomial fw = r.forward->to_poly();
  const IntPolynomial d_minus_1 = IntPolynomial::d() - IntPolynomial(1);
  if (model == TransitionModel::kJoint) return rf_make(fw, d_minus_1 * layer);
  const IntPolynomial back = r.back ? r.back->to_poly() : IntPolynomial();
  return rf_make(fw * (layer - back), d_minus_1 * layer * layer);
}

inline Vertex shifted(const Vertex& v, int x) {
  std::vector<int> symbols(v.symbols().begin() + 1, v.symbols().end());
  symbols.push_back(x);
  return Vertex(std::move(symbols));
}

inline void require_transition_regime(const Regime& regime) {
  if (regime.kind == RegimeKind::kSymbolicAllD) {
    throw Error(ErrorCode::kRegimeRequired,
                "transition probabilities need the d >= 3 regime or a concrete d");
  }
}

}  // namespace detail

// |S_i*(v)| / (|V| - 1) for a representative v of the class.
inline RationalFunction p_in_conditional(const GraphParams& params, const VertexClass& c, int i) {
  detail::check_input_index(params.diameter(), i);
  const IntPolynomial layer = layer_star_poly(params, detail::pattern_vertex(c), i).to_poly();
  return rf_make(layer, vertex_count_poly(params.family(), params.diameter()) - IntPolynomial(1));
}

// Probability that a uniform ordered pair of distinct vertices is at
// distance i. Valid for every d >= 2.
inline RationalFunction p_in(Family family, int D, int i) {
  detail::check_input_index(D, i);
  const auto params = GraphParams::symbolic(family, D);
  IntPolynomial num;
  for (const auto& c : enumerate_classes(family, D)) {
    num += c.cardinality * layer_star_poly(params, detail::pattern_vertex(c), i).to_poly();
  }
  const IntPolynomial n = vertex_count_poly(family, D);
  return rf_make(num, n * (n - IntPolynomial(1)));
}

// P_t(i, j | v in class). For j < D only the neighbor v_2 ... v_D v_{i+D-j}
// can contribute. For j = D the d successors are grouped by appended
// symbol: one term per symbol already used by v and one term, weighted by
// the number of unused symbols, for a fresh one.
inline RationalFunction p_t_conditional(Family family, int D, const VertexClass& c, int i, int j,
                                        const Regime& regime,
                                        TransitionModel model = TransitionModel::kFactorized) {
  detail::require_transition_regime(regime);
  detail::check_pair(D, i, j);
  const auto params = detail::regime_params(family, D, regime);
  const Vertex v = detail::pattern_vertex(c);
  if (j < D) {
    const auto w = gamma_plus(params, v, i, j);
    if (w.empty()) return {};
    return detail::neighbor_term(params, v, w.front(), i, j, model);
  }
  RationalFunction sum;
  const int s = c.pattern.s;
  for (int x = 0; x < s; ++x) {
    if (params.is_kautz() && x == v.back()) continue;
    sum += detail::neighbor_term(params, v, detail::shifted(v, x), i, j, model);
  }
  const int unused_shift = params.is_kautz() ? 1 : 0;
  const IntPolynomial unused = IntPolynomial::d() + IntPolynomial(unused_shift - s);
  sum += RationalFunction(unused) * detail::neighbor_term(params, v, detail::shifted(v, s), i, j, model);
  return sum;
}

// P_t(i, j | v) for one concrete vertex, summed over its actual successors.
inline RationalFunction p_t_vertex(const GraphParams& params, const Vertex& v, int i, int j,
                                   TransitionModel model = TransitionModel::kFactorized) {
  detail::check_pair(params.diameter(), i, j);
  const auto neighbors =
      j < params.diameter() ? gamma_plus(params, v, i, j) : successors(params, v);
  RationalFunction sum;
  for (const Vertex& w : neighbors) sum += detail::neighbor_term(params, v, w, i, j, model);
  return sum;
}

// The class-weighted sum for column j, without the complement convention.
inline RationalFunction p_t_direct(Family family, int D, int i, int j, const Regime& regime,
                                   TransitionModel model) {
  detail::require_transition_regime(regime);
  detail::check_pair(D, i, j);
  RationalFunction sum;
  for (const auto& c : enumerate_classes(family, D)) {
    sum += RationalFunction(c.cardinality) * p_t_conditional(family, D, c, i, j, regime, model);
  }
  return sum / RationalFunction(vertex_count_poly(family, D));
}

// Row i of the transition table, indexed by j = i..D. Under the factorized
// model P_t(i, D) is 1 - sum_{j<D} P_t(i, j) and P_t(D, D) = 1.
inline std::vector<RationalFunction> p_t_row(Family family, int D, int i, const Regime& regime,
                                             TransitionModel model = TransitionModel::kFactorized) {
  detail::require_transition_regime(regime);
  detail::check_pair(D, i, i);
  std::vector<RationalFunction> row;
  RationalFunction rest(1);
  for (int j = i; j < D; ++j) {
    row.push_back(p_t_direct(family, D, i, j, regime, model));
    rest -= row.back();
  }
  if (model == TransitionModel::kFactorized) {
    row.push_back(rest);
  } else {
    row.push_back(p_t_direct(family, D, i, D, regime, model));
  }
  return row;
}

inline RationalFunction p_t(Family family, int D, int i, int j, const Regime& regime,
                            TransitionModel model = TransitionModel::kFactorized) {
  detail::require_transition_regime(regime);
  detail::check_pair(D, i, j);
  if (j < D || model == TransitionModel::kJoint) {
    return p_t_direct(family, D, i, j, regime, model);
  }
  return p_t_row(family, D, i, regime, model).back();
}

// The last column summed directly over the deflection neighbors.
inline RationalFunction p_t_last_column_direct(Family family, int D, int i, const Regime& regime,
                                               TransitionModel model = TransitionModel::kFactorized) {
  return p_t_direct(family, D, i, D, regime, model);
}

inline RationalFunction mean_distance(Family family, int D) {
  if (D < 1) throw Error(ErrorCode::kInvalidParams, "diameter must be >= 1");
  RationalFunction sum;
  for (int i = 1; i <= D; ++i) sum += RationalFunction(i) * p_in(family, D, i);
  return sum;
}

struct AsymptoticProbe {
  BigRational p_in_scaled;    // P_in(i) * d^(D - i)
  BigRational p_t_last;       // P_t(i, D)
  BigRational p_t_max_below;  // max over i <= j < D of P_t(i, j); 0 when i = D
};

inline AsymptoticProbe asymptotic_check(Family family, int D, int i, int d_probe,
                                        TransitionModel model = TransitionModel::kFactorized) {
  if (d_probe < 2) throw Error(ErrorCode::kInvalidParams, "probe degree must be >= 2");
  detail::check_input_index(D, i);
  const Regime regime = d_probe == 2 ? Regime::concrete(2) : Regime::generic();
  AsymptoticProbe out;
  out.p_in_scaled = rf_eval(p_in(family, D, i), d_probe) *
                    BigRational(boost::multiprecision::pow(BigInt(d_probe), D - i));
  const auto row = p_t_row(family, D, i, regime, model);
  out.p_t_last = rf_eval(row.back(), d_probe);
  out.p_t_max_below = 0;
  for (std::size_t k = 0; k + 1 < row.size(); ++k) {
    out.p_t_max_below = std::max(out.p_t_max_below, rf_eval(row[k], d_probe));
  }
  return out;
}

// P_in or P_t entries for one (family, D) under one regime.
struct ProbabilityTable {
  Family family = Family::kKautz;
  int D = 0;
  Regime regime;
  TransitionModel model = TransitionModel::kFactorized;
  std::map<int, RationalFunction> input;
  std::map<std::pair<int, int>, RationalFunction> transition;
};

inline ProbabilityTable input_table(Family family, int D, const Regime& regime = Regime::all_d()) {
  ProbabilityTable t{family, D, regime, TransitionModel::kFactorized, {}, {}};
  for (int i = 1; i <= D; ++i) t.input[i] = p_in(family, D, i);
  return t;
}

inline ProbabilityTable transition_table(Family family, int D, const Regime& regime,
                                         TransitionModel model = TransitionModel::kFactorized) {
  ProbabilityTable t{family, D, regime, model, {}, {}};
  for (int i = 1; i <= D; ++i) {
    const auto row = p_t_row(family, D, i, regime, model);
    for (int j = i; j <= D; ++j) t.transition[{i, j}] = row[j - i];
  }
  return t;
}

inline std::string table_to_csv(const ProbabilityTable& t) {
  std::ostringstream os;
  const bool concrete = t.regime.is_concrete();
  os << "i,j,formula" << (concrete ? ",value_at_d" : "") << "\n";
  auto row = [&](int i, std::optional<int> j, const RationalFunction& f) {
    os << i << ',' << (j ? std::to_string(*j) : "") << ",\"" << rf_format(f) << '"';
    if (concrete) os << ',' << to_string(rf_eval(f, t.regime.d));
    os << "\n";
  };
  for (const auto& [i, f] : t.input) row(i, std::nullopt, f);
  for (const auto& [ij, f] : t.transition) row(ij.first, ij.second, f);
  return os.str();
}

inline nlohmann::json table_to_json(const ProbabilityTable& t) {
  nlohmann::json out;
  out["family"] = std::string(1, family_tag(t.family));
  out["D"] = t.D;
  out["regime"] = t.regime.tag();
  if (!t.transition.empty()) out["model"] = std::string(model_name(t.model));
  nlohmann::json entries = nlohmann::json::array();
  auto add = [&](int i, std::optional<int> j, const RationalFunction& f) {
    nlohmann::json e;
    e["i"] = i;
    if (j) e["j"] = *j;
    e["formula"] = rf_format(f);
    e["value"] = rf_to_json(f);
    if (t.regime.is_concrete()) e["value_at_d"] = to_string(rf_eval(f, t.regime.d));
    entries.push_back(std::move(e));
  };
  for (const auto& [i, f] : t.input) add(i, std::nullopt, f);
  for (const auto& [ij, f] : t.transition) add(ij.first, ij.second, f);
  out["entries"] = std::move(entries);
  return out;
}

// Absorbing chain on distances 0..D. From i >= 1: probability 1 - p to i - 1
// and p * P_t(i, j) to each j >= i. State 0 is absorbing.
struct DeflectionChain {
  Family family = Family::kKautz;
  int d = 0;
  int D = 0;
  BigRational deflect_prob;
  TransitionModel model = TransitionModel::kJoint;
  std::vector<std::vector<BigRational>> matrix;
};

inline DeflectionChain build_chain(Family family, int d, int D, const BigRational& p,
                                   TransitionModel model = TransitionModel::kJoint) {
  if (p < 0 || p > 1) throw Error(ErrorCode::kInvalidParams, "deflection probability must lie in [0, 1]");
  (void)GraphParams::concrete(family, d, D);
  DeflectionChain chain{family, d, D, p, model, {}};
  chain.matrix.assign(D + 1, std::vector<BigRational>(D + 1, BigRational(0)));
  chain.matrix[0][0] = 1;
  const Regime regime = Regime::concrete(d);
  for (int i = 1; i <= D; ++i) {
    chain.matrix[i][i - 1] += 1 - p;
    if (p == 0) continue;
    const auto row = p_t_row(family, D, i, regime, model);
    for (int j = i; j <= D; ++j) chain.matrix[i][j] += p * rf_eval(row[j - i], d);
  }
  return chain;
}

// Expected hops to absorption from each state 1..D (index 0 holds h_0 = 0).
inline std::vector<BigRational> expected_hops_by_state(const DeflectionChain& chain) {
  const int D = chain.D;
  if (chain.deflect_prob == 1) {
    throw Error(ErrorCode::kDiverges, "with p = 1 the packet never reaches its destination");
  }
  // (I - Q) h = 1 over the transient states 1..D.
  std::vector<std::vector<BigRational>> a(D, std::vector<BigRational>(D + 1, BigRational(0)));
  for (int i = 1; i <= D; ++i) {
    for (int j = 1; j <= D; ++j) a[i - 1][j - 1] = (i == j ? 1 : 0) - chain.matrix[i][j];
    a[i - 1][D] = 1;
  }
  for (int col = 0; col < D; ++col) {
    int pivot = col;
    while (pivot < D && a[pivot][col] == 0) ++pivot;
    if (pivot == D) throw Error(ErrorCode::kSingularSystem, "absorption system is singular");
    std::swap(a[pivot], a[col]);
    for (int r = 0; r < D; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col] / a[col][col];
      for (int k = col; k <= D; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<BigRational> h(D + 1, BigRational(0));
  for (int i = 1; i <= D; ++i) h[i] = a[i - 1][D] / a[i - 1][i - 1];
  return h;
}

// Start distribution defaults to P_in at the chain's degree.
inline BigRational expected_hops(const DeflectionChain& chain,
                                 std::optional<std::vector<BigRational>> start = std::nullopt) {
  if (!start) {
    start.emplace(chain.D + 1, BigRational(0));
    for (int i = 1; i <= chain.D; ++i) (*start)[i] = rf_eval(p_in(chain.family, chain.D, i), chain.d);
  }
  if (static_cast<int>(start->size()) != chain.D + 1) {
    throw Error(ErrorCode::kLengthMismatch, "start distribution must have D + 1 entries");
  }
  BigRational total = 0;
  for (const auto& x : *start) total += x;
  if (total != 1 || (*start)[0] != 0) {
    throw Error(ErrorCode::kInvalidParams, "start distribution must sum to 1 over states 1..D");
  }
  const auto h = expected_hops_by_state(chain);
  BigRational e = 0;
  for (int i = 1; i <= chain.D; ++i) e += (*start)[i] * h[i];
  return e;
}

}  // namespace layerscope

#endif  // LAYERSCOPE_PROBABILITIES_HPP_
