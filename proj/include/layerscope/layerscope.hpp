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

// Umbrella header for the whole library.

#ifndef LAYERSCOPE_LAYERSCOPE_HPP_
#define LAYERSCOPE_LAYERSCOPE_HPP_

#include "layerscope/alphabet_graph.hpp"
#include "layerscope/class_partition.hpp"
#include "layerscope/error.hpp"
#include "layerscope/layer_algebra.hpp"
#include "layerscope/oracle.hpp"
#include "layerscope/poly_rational.hpp"
#include "layerscope/probabilities.hpp"

#endif  // LAYERSCOPE_LAYERSCOPE_HPP_
