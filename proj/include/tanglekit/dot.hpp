// Copyright 2026 The tanglekit Authors
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


// Deterministic Graphviz output for trees and S-trees.

#ifndef TANGLEKIT_DOT_HPP_
#define TANGLEKIT_DOT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/duality.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/tst.hpp"

namespace tanglekit {

// Tangle leaves are green, forbidden leaves red, unresolved leaves grey.
// Nodes flagged in `overlay` (the tangle nodes of a tree of tangles) are
// filled gold. Edges carry the beta label of their lower end.
std::string emit_dot(const SeparationSystem& system, const SeparationTree& tree,
                     const std::vector<std::optional<LeafClass>>* leaf_class =
                         nullptr,
                     const std::vector<bool>* overlay = nullptr);

// Each edge is drawn a -> b with label alpha(a -> b).
std::string emit_dot(const SeparationSystem& system, const STree& tree);

}  // namespace tanglekit

#endif  // TANGLEKIT_DOT_HPP_
