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

// Closed-form distance-layer structure. Everything here works on symbol
// sequences only: S_k(v) (walks of length k) containment tests, the layer
// polynomials |S_i*(v)| = d^i - sum a_k d^k, and the way the layer S_i*(v)
// splits across the layers of a successor w.
//
// The d = 2 special cases are selected by params.degree_two(); symbolic
// params behave like any d >= 3.

#ifndef LAYERSCOPE_LAYER_ALGEBRA_HPP_
#define LAYERSCOPE_LAYER_ALGEBRA_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "layerscope/alphabet_graph.hpp"
#include "layerscope/error.hpp"
#include "layerscope/poly_rational.hpp"

namespace layerscope {

// d^top - sum_k sub[k] d^k. Only nonzero coefficients are stored.
struct LayerPolynomial {
  int top = 0;
  std::map<int, int> sub;

  IntPolynomial to_poly() const {
    IntPolynomial p = d_pow(top);
    for (const auto& [k, c] : sub) p -= IntPolynomial::monomial(c, k);
    return p;
  }

  int coeff(int k) const {
    const auto it = sub.find(k);
    return it == sub.end() ? 0 : it->second;
  }

  BigInt eval(const BigInt& d) const { return to_poly().eval(d); }

  bool operator==(const LayerPolynomial&) const = default;
};

inline std::string format_layer(const LayerPolynomial& p) {
  return poly_format(p.to_poly());
}

namespace detail {

inline void check_range(const GraphParams& params, int k, int i) {
  if (k < 0 || k > i || i > params.diameter()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "need 0 <= k <= i <= D, got k=" + std::to_string(k) +
                    " i=" + std::to_string(i));
  }
}

inline void check_successor(const GraphParams& params, const Vertex& v,
                            const Vertex& w) {
  if (!is_successor(params, v, w)) {
    throw Error(ErrorCode::kNotASuccessor,
                format_vertex(w) + " is not a successor of " + format_vertex(v));
  }
}

inline void check_layer_index(const GraphParams& params, int i) {
  if (i < 1 || i > params.diameter()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "need 1 <= i <= D, got i=" + std::to_string(i));
  }
}

inline LayerPolynomial make_layer(int top, const std::vector<int>& coeffs) {
  LayerPolynomial p{top, {}};
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (coeffs[k] != 0) p.sub[k] = coeffs[k];
  }
  return p;
}

}  // namespace detail

// S_k(v) is a subset of S_i(v2), for 0 <= k <= i <= D.
inline bool s_contains(const GraphParams& params, const Vertex& v, int k,
                       const Vertex& v2, int i) {
  detail::check_range(params, k, i);
  const int D = params.diameter();
  if (i < D) return same_sequence(v.segment(k + 1, D - (i - k)), v2.segment(i + 1, D));
  if (!params.is_kautz()) return true;
  if (k < D) return v.at(k + 1) != v2.at(D);
  return v.at(D) == v2.at(D);
}

inline bool s_contains(const GraphParams& params, const Vertex& v, int k, int i) {
  return s_contains(params, v, k, v, i);
}

// S_{k,i}(v) is nonempty: S_k(v) sits inside S_i(v) and is disjoint from
// every S_j(v) strictly between.
inline bool s_ki_nonempty(const GraphParams& params, const Vertex& v, int k, int i) {
  detail::check_range(params, k, i);
  if (k == i) return true;
  if (!s_contains(params, v, k, i)) return false;
  const int D = params.diameter();
  for (int j = k + 1; j < i; ++j) {
    if (same_sequence(v.segment(k + 1, D - (j - k)), v.segment(j + 1, D))) return false;
  }
  return true;
}

// a_0 ... a_{i-1}.
inline std::vector<int> layer_coefficients(const GraphParams& params, const Vertex& v, int i) {
  detail::check_range(params, 0, i);
  std::vector<int> a(i);
  for (int k = 0; k < i; ++k) a[k] = s_ki_nonempty(params, v, k, i) ? 1 : 0;
  return a;
}

// |S_i*(v)| as d^i - sum a_k d^k; i = 0 gives 1.
inline LayerPolynomial layer_star_poly(const GraphParams& params, const Vertex& v, int i) {
  return detail::make_layer(i, layer_coefficients(params, v, i));
}

// Successors w with S_i(v) meeting S_j(w). For j < D the only candidate is
// v_2 ... v_D v_{i+D-j}.
inline std::vector<Vertex> gamma_plus(const GraphParams& params, const Vertex& v, int i, int j) {
  detail::check_range(params, i, j);
  const int D = params.diameter();
  if (j == D) {
    std::vector<Vertex> out;
    for (Vertex& w : successors(params, v)) {
      if (!params.is_kautz() || i == D || v.at(i + 1) == v.at(D) || w.back() != v.at(i + 1)) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }
  std::vector<int> symbols(v.symbols().begin() + 1, v.symbols().end());
  symbols.push_back(v.at(i + D - j));
  Vertex w(std::move(symbols));
  if (params.is_kautz() && w.back() == v.back()) return {};
  if (!same_sequence(v.segment(i + 1, D - (j - i)), w.segment(j + 1, D))) return {};
  return {w};
}

namespace detail {

// S_i*(v) meets S_{i-1}*(w) unless v is a De Bruijn vertex whose tail
// v_i ... v_D repeats w_D.
inline bool back_empty(const GraphParams& params, const Vertex& v, const Vertex& w, int i) {
  if (params.is_kautz()) return false;
  for (int t = i; t <= params.diameter(); ++t) {
    if (v.at(t) != w.back()) return false;
  }
  return true;
}

inline bool forward_nonempty(const GraphParams& params, const Vertex& v, const Vertex& w,
                             int i, int j) {
  const int D = params.diameter();
  const bool two = params.degree_two();
  if (i == D && j == D) return !two || params.is_kautz() || v.back() == w.back();
  bool meets;
  if (j < D) {
    meets = same_sequence(v.segment(i + 1, D - (j - i)), w.segment(j + 1, D));
  } else {
    meets = !params.is_kautz() || v.at(i + 1) != w.back();
  }
  if (!meets) return false;
  for (int k = i; k < j; ++k) {
    if (s_ki_nonempty(params, w, k, j) && s_contains(params, v, i, w, k)) return false;
  }
  if (two && j == D) {
    const bool shifted = !same_sequence(v.segment(i, D - 1), v.segment(i + 1, D));
    if (!shifted && s_ki_nonempty(params, w, i - 1, j)) return false;
  }
  return true;
}

}  // namespace detail

// S_i*(v) meets S_j*(w) for a successor w of v.
inline bool intersection_nonempty(const GraphParams& params, const Vertex& v, const Vertex& w,
                                  int i, int j) {
  detail::check_successor(params, v, w);
  detail::check_layer_index(params, i);
  if (j < 0 || j > params.diameter()) {
    throw Error(ErrorCode::kIndexOutOfRange, "need 0 <= j <= D, got j=" + std::to_string(j));
  }
  if (j < i - 1) return false;
  if (j == i - 1) return !detail::back_empty(params, v, w, i);
  return detail::forward_nonempty(params, v, w, i, j);
}

// Successors w with S_i*(v) meeting S_j*(w).
inline std::vector<Vertex> gamma_star(const GraphParams& params, const Vertex& v, int i, int j) {
  detail::check_range(params, i, j);
  std::vector<Vertex> out;
  if (i == 0) return out;
  const std::vector<Vertex> candidates =
      j < params.diameter() ? gamma_plus(params, v, i, j) : successors(params, v);
  for (const Vertex& w : candidates) {
    if (intersection_nonempty(params, v, w, i, j)) out.push_back(w);
  }
  return out;
}

// The only j in [i, D] with S_i*(v) meeting S_j*(w), if any.
inline std::optional<int> unique_j0(const GraphParams& params, const Vertex& v, const Vertex& w,
                                    int i) {
  detail::check_successor(params, v, w);
  detail::check_layer_index(params, i);
  for (int j = i; j <= params.diameter(); ++j) {
    if (detail::forward_nonempty(params, v, w, i, j)) return j;
  }
  return std::nullopt;
}

enum class IntersectionCase { kSplit, kForwardOnly, kBackOnly };

constexpr std::string_view intersection_case_name(IntersectionCase c) {
  switch (c) {
    case IntersectionCase::kSplit: return "Split";
    case IntersectionCase::kForwardOnly: return "ForwardOnly";
    case IntersectionCase::kBackOnly: return "BackOnly";
  }
  return "?";
}

// How S_i*(v) splits between S_{i-1}*(w) (back) and S_{j0}*(w) (forward).
struct IntersectionReport {
  Vertex v;
  Vertex w;
  int i = 0;
  IntersectionCase kind = IntersectionCase::kSplit;
  std::optional<LayerPolynomial> back;
  std::optional<int> forward_j;
  std::optional<LayerPolynomial> forward;
};

inline IntersectionReport intersection_report(const GraphParams& params, const Vertex& v,
                                              const Vertex& w, int i) {
  const std::optional<int> j0 = unique_j0(params, v, w, i);
  const std::vector<int> a = layer_coefficients(params, v, i);
  const int D = params.diameter();
  IntersectionReport r{v, w, i, IntersectionCase::kSplit, std::nullopt, std::nullopt, std::nullopt};

  if (detail::back_empty(params, v, w, i)) {
    r.kind = IntersectionCase::kForwardOnly;
    r.forward_j = j0;
    r.forward = detail::make_layer(i, a);
    return r;
  }
  const std::vector<int> a_low(a.begin(), a.end() - 1);
  if (!j0) {
    r.kind = IntersectionCase::kBackOnly;
    r.back = detail::make_layer(i - 1, a_low);
    return r;
  }
  std::vector<int> b(i - 1), fwd(i);
  for (int k = 0; k + 1 < i; ++k) {
    b[k] = (a[k] != 0 && v.at(D - i + k + 1) == w.back()) ? 1 : 0;
    fwd[k] = a[k] - b[k];
  }
  fwd[i - 1] = a[i - 1] + 1;
  r.back = detail::make_layer(i - 1, b);
  r.forward_j = j0;
  r.forward = detail::make_layer(i, fwd);
  return r;
}

inline nlohmann::json to_json(const IntersectionReport& r, std::optional<int> alphabet = {}) {
  nlohmann::json out;
  out["v"] = format_vertex(r.v, alphabet);
  out["w"] = format_vertex(r.w, alphabet);
  out["i"] = r.i;
  out["case"] = std::string(intersection_case_name(r.kind));
  out["j0"] = r.forward_j ? nlohmann::json(*r.forward_j) : nlohmann::json(nullptr);
  out["back"] = r.back ? poly_to_json(r.back->to_poly()) : nlohmann::json(nullptr);
  out["forward"] = r.forward ? poly_to_json(r.forward->to_poly()) : nlohmann::json(nullptr);
  return out;
}

}  // namespace layerscope

#endif  // LAYERSCOPE_LAYER_ALGEBRA_HPP_
