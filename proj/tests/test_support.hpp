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

#ifndef LAYERSCOPE_TESTS_TEST_SUPPORT_HPP_
#define LAYERSCOPE_TESTS_TEST_SUPPORT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "layerscope/alphabet_graph.hpp"

namespace layerscope::testing {

// Greek-letter words as symbol vectors: alpha = 0, beta = 1, gamma = 2, ...
inline std::vector<int> greek(std::string_view word) {
  static const std::vector<std::string> letters = {"α", "β", "γ", "δ", "ε", "ζ"};
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    bool matched = false;
    for (std::size_t n = 0; n < letters.size(); ++n) {
      if (word.substr(pos, letters[n].size()) == letters[n]) {
        out.push_back(static_cast<int>(n));
        pos += letters[n].size();
        matched = true;
        break;
      }
    }
    if (!matched) throw std::invalid_argument("not a greek word");
  }
  return out;
}

inline Vertex gv(std::string_view word) { return Vertex(greek(word)); }

inline std::vector<int> repeat(std::vector<int> unit, int times) {
  std::vector<int> out;
  for (int t = 0; t < times; ++t) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

struct GridCase {
  Family family;
  int d;
  int D;
};

// Both families, d in {2,3,4}, D in {2..5}.
inline std::vector<GridCase> default_grid() {
  std::vector<GridCase> out;
  for (Family f : {Family::kDeBruijn, Family::kKautz}) {
    for (int d = 2; d <= 4; ++d) {
      for (int D = 2; D <= 5; ++D) out.push_back({f, d, D});
    }
  }
  return out;
}

inline std::string grid_name(const GridCase& c) {
  return std::string(1, family_tag(c.family)) + "(" + std::to_string(c.d) + "," +
         std::to_string(c.D) + ")";
}

}  // namespace layerscope::testing

#endif  // LAYERSCOPE_TESTS_TEST_SUPPORT_HPP_
