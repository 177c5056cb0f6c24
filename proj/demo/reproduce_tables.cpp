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

// Prints the K(d,4) class layer table, the input and transition
// probability tables, and mean distances for a few small graphs.

#include <iostream>
#include <string>

#include "layerscope/layerscope.hpp"

using namespace layerscope;

int main() {
  constexpr auto kK = Family::kKautz;
  const auto k4 = GraphParams::symbolic(kK, 4);

  std::cout << "K(d,4) layer polynomials |S_i*(v)| by vertex class\n";
  std::cout << "class\tsize\ti=1\ti=2\ti=3\ti=4\n";
  for (const VertexClass& c : enumerate_classes(kK, 4)) {
    const Vertex v(c.pattern.code);
    std::cout << format_pattern(c.pattern) << "\t" << poly_format(c.cardinality);
    for (int i = 1; i <= 4; ++i) std::cout << "\t" << format_layer(layer_star_poly(k4, v, i));
    std::cout << "\n";
  }

  std::cout << "\nK(d,4) input probabilities\n";
  for (int i = 1; i <= 4; ++i) std::cout << "P_in(" << i << ") = " << rf_format(p_in(kK, 4, i)) << "\n";

  std::cout << "\nK(d,4) transition probabilities, d >= 3\n";
  const ProbabilityTable t = transition_table(kK, 4, Regime::generic());
  for (const auto& [ij, f] : t.transition) {
    std::cout << "P_t(" << ij.first << "," << ij.second << ") = " << rf_format(f) << "\n";
  }

  std::cout << "\nMean distance\n";
  for (Family f : {Family::kDeBruijn, kK}) {
    for (int D = 1; D <= 4; ++D) {
      const RationalFunction m = mean_distance(f, D);
      std::cout << family_tag(f) << "(d," << D << ") = " << rf_format(m) << "   at d=3: " << to_string(rf_eval(m, 3))
                << "\n";
    }
  }

  std::cout << "\nK(3,4) expected hops under per-hop deflection probability p\n";
  for (const char* p : {"0", "1/20", "1/10", "1/4", "1/2"}) {
    const BigRational hops = expected_hops(build_chain(kK, 3, 4, parse_rational(p)));
    std::cout << "p = " << p << "\t" << to_string(hops) << " (" << to_double(hops) << ")\n";
  }
  return 0;
}
