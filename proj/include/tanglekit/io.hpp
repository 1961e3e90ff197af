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


// JSON ingestion and emission. Every format carries a versioned "schema"
// field; every emitted document re-ingests to an equal value.

#ifndef TANGLEKIT_IO_HPP_
#define TANGLEKIT_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tanglekit/duality.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/forbidden.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/tst.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit::io {

using Json = nlohmann::json;

inline constexpr std::string_view kSystemSchema = "tanglekit/system@1";
inline constexpr std::string_view kBipartitionSchema = "tanglekit/bipartitions@1";
inline constexpr std::string_view kFamilySchema = "tanglekit/family@1";
inline constexpr std::string_view kTreeSchema = "tanglekit/tree@1";
inline constexpr std::string_view kSTreeSchema = "tanglekit/stree@1";
inline constexpr std::string_view kOrderSchema = "tanglekit/order@1";
inline constexpr std::string_view kResultSchema = "tanglekit/result@1";
inline constexpr std::string_view kErrorSchema = "tanglekit/error@1";

struct GraphData {
  Graph graph;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sides;
};

// A loaded input: a separation system, optionally a universe over its
// ambient poset, an order function, and the graph it came from.
struct Input {
  SeparationSystem system;
  std::optional<Universe> universe;
  std::optional<OrderFunction> order;
  std::optional<GraphData> graph;
};

bool equal(const Input& a, const Input& b);

Input parse_system(const Json& doc);
Input parse_system_text(std::string_view text);
Input parse_graph(std::string_view text);
Input parse_bipartitions(const Json& doc);
Input parse_bipartitions_text(std::string_view text);
// Dispatches on the schema field; non-JSON text is read as an edge list.
Input parse_input(std::string_view text);

Json system_to_json(const Input& input);

Json set_to_json(const SeparationSystem& system, const OrientedSet& sigma);
OrientedSet set_from_json(const SeparationSystem& system, const Json& j,
                          const std::string& field);

Json order_to_json(const SeparationSystem& system, const OrderFunction& order);
OrderFunction order_from_json(const SeparationSystem& system, const Json& j,
                              const std::string& field = "order");

struct FamilySpec {
  ForbiddenFamily family;
  std::vector<std::string> generate;
};

FamilySpec parse_family(const SeparationSystem& system, const Json& doc);
FamilySpec parse_family_text(const SeparationSystem& system,
                              std::string_view text);
Json family_to_json(const SeparationSystem& system,
                    const ForbiddenFamily& family);
bool equal(const ForbiddenFamily& a, const ForbiddenFamily& b);

Json tree_to_json(const SeparationSystem& system, const SeparationTree& tree,
                  const std::vector<std::optional<LeafClass>>* leaf_class =
                      nullptr);
SeparationTree tree_from_json(const SeparationSystem& system, const Json& doc);

Json stree_to_json(const SeparationSystem& system, const STree& tree);
STree stree_from_json(const SeparationSystem& system, const Json& doc);

Json error_to_json(const Error& error, const SeparationSystem* system);

// Parses JSON text; syntax errors become kMalformed with line and column.
Json parse_json(std::string_view text);

}  // namespace tanglekit::io

#endif  // TANGLEKIT_IO_HPP_
