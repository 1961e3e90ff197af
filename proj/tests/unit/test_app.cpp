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


#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tanglekit/app.hpp"
#include "tanglekit/io.hpp"

namespace {

using namespace tanglekit;
using io::Json;

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TANGLEKIT_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunSpec p3_spec(const std::string& command) {
  RunSpec spec;
  spec.command = command;
  spec.source = InputSource::kGraph;
  spec.input = fixture("p3.graph");
  spec.family = fixture("tangle-stars.json");
  if (command != "validate" && command != "totins" && command != "refine-order")
    spec.k = Rational(2);
  spec.refine = command != "newduality" && command != "validate" &&
                command != "refine-order";
  return spec;
}

// Union of the optimal distinguishers of every pair, increasing.
std::vector<int> oracle_union(const Json& oracle) {
  std::set<int> u;
  for (const Json& pair : oracle)
    for (const Json& d : pair["optimal"]) u.insert(d.get<int>());
  return {u.begin(), u.end()};
}

Json run_json(const RunSpec& spec, int expected_exit) {
  Artifacts a = run(spec);
  EXPECT_EQ(a.exit_code, expected_exit) << spec.command << ": " << a.json;
  Json j = Json::parse(a.json);
  EXPECT_EQ(j["schema"], std::string(io::kResultSchema));
  EXPECT_EQ(j["command"], spec.command);
  EXPECT_EQ(j["exit_code"], expected_exit);
  return j;
}

TEST(App, CommandsListed) {
  const auto& c = commands();
  for (const char* name : {"validate", "tangles", "tst", "reduce", "duality",
                           "newduality", "tot", "totins", "refine-order"})
    EXPECT_NE(std::find(c.begin(), c.end(), name), c.end()) << name;
}

TEST(App, ValidateP3) {
  Json j = run_json(p3_spec("validate"), 0);
  EXPECT_EQ(j["result"]["oriented"], 17);
  EXPECT_EQ(j["result"]["separations"], 9);
}

TEST(App, TanglesP3) {
  Json j = run_json(p3_spec("tangles"), 0);
  EXPECT_EQ(j["result"]["count"], 2);
}

TEST(App, TstAndReduceP3) {
  Json t = run_json(p3_spec("tst"), 0);
  EXPECT_EQ(t["result"]["tangles"].size(), 2u);
  EXPECT_FALSE(t["result"]["ftree"].get<bool>());
  Json r = run_json(p3_spec("reduce"), 0);
  EXPECT_TRUE(r["result"]["irreducible"].get<bool>());
}

TEST(App, DualityRejectsTrivialThenPatches) {
  RunSpec spec = p3_spec("duality");
  Json j = run_json(spec, 2);
  EXPECT_EQ(j["error"]["kind"], "TrivialElementsPresent");
  spec.trivial = TrivialPolicy::kPatch;
  Json ok = run_json(spec, 0);
  EXPECT_EQ(ok["result"]["outcome"], "tangle");
}

TEST(App, NewDualityP3) {
  RunSpec spec = p3_spec("newduality");
  spec.trivial = TrivialPolicy::kPatch;
  spec.cross_check_rich = true;
  Json j = run_json(spec, 0);
  EXPECT_TRUE(j["result"]["closed_under_shifting"].get<bool>());
  EXPECT_TRUE(j["result"]["rich_brute_force"].get<bool>());
  EXPECT_EQ(j["result"]["tangles"].size(), 2u);
}

TEST(App, TotP3) {
  RunSpec spec = p3_spec("tot");
  Json j = run_json(spec, 0);
  EXPECT_EQ(j["result"]["n"].get<std::vector<int>>(),
            oracle_union(j["result"]["oracle"]));
  EXPECT_TRUE(j["result"]["verification"]["ok"].get<bool>());
}

TEST(App, TotInsP3) {
  RunSpec spec = p3_spec("totins");
  spec.family.reset();
  spec.generate = {"R-full", "graph-stars"};
  Json j = run_json(spec, 0);
  EXPECT_EQ(j["result"]["n"].get<std::vector<int>>(),
            oracle_union(j["result"]["oracle"]));
  EXPECT_EQ(j["result"]["maximal"].size(), 2u);
}

TEST(App, TotInsRejectsThreshold) {
  RunSpec spec = p3_spec("totins");
  spec.k = Rational(2);
  run_json(spec, 1);
}

TEST(App, RefineOrderP3) {
  Json j = run_json(p3_spec("refine-order"), 0);
  EXPECT_TRUE(j["result"].contains("injective"));
  EXPECT_TRUE(j["result"].contains("enumeration"));
}

TEST(App, NonInjectiveOrderIsAHypothesisFailure) {
  RunSpec spec = p3_spec("tst");
  spec.refine = false;
  Json j = run_json(spec, 2);
  EXPECT_EQ(j["error"]["kind"], "NonInjectiveOrder");
}

TEST(App, BoundNeedsUnsafeFlag) {
  RunSpec spec = p3_spec("tangles");
  spec.bound = 18;
  run_json(spec, 1);
  spec.unsafe_bounds = true;
  run_json(spec, 0);
}

TEST(App, MalformedInputExitsOne) {
  RunSpec spec;
  spec.command = "validate";
  spec.source = InputSource::kSystem;
  spec.input = "{\"schema\": ";
  Json j = run_json(spec, 1);
  EXPECT_EQ(j["error"]["kind"], "Malformed");
}

TEST(App, DotIsDeterministic) {
  RunSpec spec = p3_spec("tot");
  spec.dot = true;
  Artifacts a = run(spec), b = run(spec);
  ASSERT_TRUE(a.dot);
  ASSERT_TRUE(b.dot);
  EXPECT_EQ(*a.dot, *b.dot);
  EXPECT_EQ(a.json, b.json);
}

TEST(App, OverlayColoursExactlyTangleNodes) {
  RunSpec spec = p3_spec("tot");
  spec.dot = true;
  Artifacts a = run(spec);
  ASSERT_TRUE(a.dot);
  Json j = Json::parse(a.json);
  std::set<int> expected;
  for (const Json& v : j["result"]["tangle_nodes"]) expected.insert(v.get<int>());
  std::set<int> gold;
  std::regex node(R"(n(\d+) \[[^\]]*fillcolor=gold)");
  for (std::sregex_iterator it(a.dot->begin(), a.dot->end(), node), end; it != end; ++it)
    gold.insert(std::stoi((*it)[1]));
  EXPECT_FALSE(expected.empty());
  EXPECT_EQ(gold, expected);
}

}  // namespace
