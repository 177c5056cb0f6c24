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

// Vertices up to relabeling of the alphabet. A class is identified by its
// restricted-growth pattern (symbols renamed by first occurrence).

#ifndef LAYERSCOPE_CLASS_PARTITION_HPP_
#define LAYERSCOPE_CLASS_PARTITION_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "layerscope/alphabet_graph.hpp"
#include "layerscope/error.hpp"
#include "layerscope/poly_rational.hpp"

namespace layerscope {

inline constexpr int kMaxPatternLength = 16;

struct Pattern {
  std::vector<int> code;
  int s = 0;

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;
};

struct VertexClass {
  Pattern pattern;
  IntPolynomial cardinality;
};

inline std::string format_pattern(const Pattern& p) {
  return format_vertex(Vertex(p.code));
}

inline Pattern canonical_pattern(const Vertex& v) {
  std::map<int, int> rename;
  Pattern p;
  for (int x : v.symbols()) {
    auto [it, fresh] = rename.try_emplace(x, static_cast<int>(rename.size()));
    p.code.push_back(it->second);
  }
  p.s = static_cast<int>(rename.size());
  return p;
}

// Parses "0102" style text and checks the restricted-growth form.
inline Pattern parse_pattern(Family family, std::string_view text) {
  const Vertex v(parse_symbols(text));
  const Pattern p = canonical_pattern(v);
  if (p.code != std::vector<int>(v.symbols().begin(), v.symbols().end())) {
    throw Error(ErrorCode::kParse, "'" + std::string(text) + "' is not a restricted-growth pattern");
  }
  if (family == Family::kKautz) {
    for (std::size_t k = 0; k + 1 < p.code.size(); ++k) {
      if (p.code[k] == p.code[k + 1]) {
        throw Error(ErrorCode::kKautzRepeat, "pattern '" + std::string(text) + "' repeats a symbol");
      }
    }
  }
  return p;
}

// Number of vertices sharing a pattern with s symbols:
// d(d-1)...(d-s+1) for De Bruijn, (d+1)d...(d-s+2) for Kautz.
inline IntPolynomial class_cardinality(Family family, int s) {
  const int shift = family == Family::kKautz ? 1 : 0;
  IntPolynomial out(1);
  for (int t = 0; t < s; ++t) out *= IntPolynomial::d() + IntPolynomial(shift - t);
  return out;
}

inline std::vector<VertexClass> enumerate_classes(Family family, int D) {
  if (D < 1 || D > kMaxPatternLength) {
    throw Error(ErrorCode::kInvalidParams,
                "pattern length must be in [1, " + std::to_string(kMaxPatternLength) + "]");
  }
  const bool kautz = family == Family::kKautz;
  std::vector<VertexClass> out;
  std::vector<int> code{0};
  // Depth-first in lexicographic order; `top` is the largest symbol so far.
  auto rec = [&](auto&& self, int top) -> void {
    if (static_cast<int>(code.size()) == D) {
      out.push_back({Pattern{code, top + 1}, class_cardinality(family, top + 1)});
      return;
    }
    for (int x = 0; x <= top + 1; ++x) {
      if (kautz && x == code.back()) continue;
      code.push_back(x);
      self(self, std::max(top, x));
      code.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::map<int, std::uint64_t> n_s_counts(Family family, int D) {
  std::map<int, std::uint64_t> out;
  for (const auto& c : enumerate_classes(family, D)) ++out[c.pattern.s];
  return out;
}

inline Vertex representative(const VertexClass& c, const GraphParams& params) {
  const auto alphabet = params.alphabet_size();
  if (alphabet && c.pattern.s > *alphabet) {
    throw Error(ErrorCode::kAlphabetTooSmall,
                "pattern " + format_pattern(c.pattern) + " needs " + std::to_string(c.pattern.s) +
                    " symbols, alphabet has " + std::to_string(*alphabet));
  }
  return validate_vertex(params, c.pattern.code);
}

inline VertexClass class_of(Family family, const Pattern& p) {
  return {p, class_cardinality(family, p.s)};
}

inline nlohmann::json classes_to_json(const std::vector<VertexClass>& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : classes) {
    out.push_back({{"pattern", format_pattern(c.pattern)},
                   {"s", c.pattern.s},
                   {"cardinality", poly_format(c.cardinality)},
                   {"cardinality_coeffs", poly_to_json(c.cardinality)}});
  }
  return out;
}

inline std::string classes_to_csv(const std::vector<VertexClass>& classes) {
  std::ostringstream os;
  os << "pattern,s,cardinality\n";
  for (const auto& c : classes) {
    os << format_pattern(c.pattern) << ',' << c.pattern.s << ",\"" << poly_format(c.cardinality)
       << "\"\n";
  }
  return os.str();
}

}  // namespace layerscope

#endif  // LAYERSCOPE_CLASS_PARTITION_HPP_
