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

#include <fstream>
#include <sstream>
#include <string>

#include "tanglekit/tanglekit.h"

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TANGLEKIT_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  tk_input* input = nullptr;
  tk_family* family = nullptr;
  ~Loaded() {
    tk_family_free(family);
    tk_input_free(input);
  }
};

void load_p3(Loaded& l) {
  ASSERT_EQ(tk_input_load(TK_SOURCE_GRAPH, fixture("p3.graph").c_str(), &l.input), TK_OK)
      << tk_last_error();
  ASSERT_EQ(tk_family_load(l.input, fixture("tangle-stars.json").c_str(), &l.family), TK_OK)
      << tk_last_error();
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_NE(std::string(tk_version()), "");
  EXPECT_STREQ(tk_status_name(TK_OK), "Ok");
  EXPECT_STREQ(tk_status_name(TK_NOT_RICH), "NotRich");
  EXPECT_EQ(tk_status_exit_code(TK_OK), 0);
  EXPECT_EQ(tk_status_exit_code(TK_MALFORMED), 1);
  EXPECT_EQ(tk_status_exit_code(TK_NOT_RICH), 2);
  EXPECT_EQ(tk_status_exit_code(TK_THEOREM_VIOLATION), 3);
}

TEST(CApi, LoadGraphAndExport) {
  Loaded l;
  load_p3(l);
  EXPECT_EQ(tk_input_oriented(l.input), 17u);
  EXPECT_EQ(tk_input_separations(l.input), 9u);
  EXPECT_TRUE(tk_input_has_universe(l.input));
  EXPECT_TRUE(tk_input_has_order(l.input));
  char* json = nullptr;
  ASSERT_EQ(tk_input_to_json(l.input, &json), TK_OK);
  tk_input* back = nullptr;
  EXPECT_EQ(tk_input_load(TK_SOURCE_SYSTEM, json, &back), TK_OK) << tk_last_error();
  EXPECT_EQ(tk_input_oriented(back), 17u);
  tk_input_free(back);
  tk_string_free(json);
}

TEST(CApi, MalformedInputReportsError) {
  tk_input* input = nullptr;
  EXPECT_EQ(tk_input_load(TK_SOURCE_SYSTEM, "{\"schema\": ", &input), TK_MALFORMED);
  EXPECT_EQ(input, nullptr);
  EXPECT_NE(std::string(tk_last_error()).find("line 1"), std::string::npos)
      << tk_last_error();
  EXPECT_NE(std::string(tk_last_error_json()).find("\"Malformed\""), std::string::npos);
}

TEST(CApi, NullArgumentsAreInvalid) {
  tk_input* input = nullptr;
  EXPECT_EQ(tk_input_load(TK_SOURCE_GRAPH, nullptr, &input), TK_INVALID_ARGUMENT);
  EXPECT_EQ(tk_input_load(TK_SOURCE_GRAPH, "a b\n", nullptr), TK_INVALID_ARGUMENT);
  tk_result* r = nullptr;
  EXPECT_EQ(tk_run(nullptr, nullptr, nullptr, &r), TK_INVALID_ARGUMENT);
  tk_input_free(nullptr);
  tk_family_free(nullptr);
  tk_result_free(nullptr);
}

TEST(CApi, RunTanglesAndDot) {
  Loaded l;
  load_p3(l);
  tk_options o;
  tk_options_init(&o);
  EXPECT_EQ(o.bound, 16u);
  o.command = "tot";
  o.k = "2";
  o.refine = 1;
  o.dot = 1;
  tk_result* r = nullptr;
  ASSERT_EQ(tk_run(l.input, l.family, &o, &r), TK_OK) << tk_last_error();
  EXPECT_EQ(tk_result_exit_code(r), 0) << tk_result_json(r);
  EXPECT_NE(std::string(tk_result_json(r)).find("\"tanglekit/result@1\""), std::string::npos);
  ASSERT_NE(tk_result_dot(r), nullptr);
  EXPECT_EQ(std::string(tk_result_dot(r)).rfind("digraph", 0), 0u);
  tk_result_free(r);
}

TEST(CApi, RunFailureIsInTheResult) {
  Loaded l;
  load_p3(l);
  tk_options o;
  tk_options_init(&o);
  o.command = "duality";
  o.k = "2";
  o.refine = 1;
  tk_result* r = nullptr;
  ASSERT_EQ(tk_run(l.input, l.family, &o, &r), TK_OK);
  EXPECT_EQ(tk_result_exit_code(r), 2);
  EXPECT_NE(std::string(tk_result_json(r)).find("TrivialElementsPresent"), std::string::npos);
  EXPECT_EQ(tk_result_dot(r), nullptr);
  tk_result_free(r);
  o.trivial = TK_TRIVIAL_PATCH;
  ASSERT_EQ(tk_run(l.input, l.family, &o, &r), TK_OK);
  EXPECT_EQ(tk_result_exit_code(r), 0) << tk_result_json(r);
  tk_result_free(r);
}

TEST(CApi, UnknownGenerator) {
  Loaded l;
  load_p3(l);
  EXPECT_EQ(tk_family_add_generator(l.family, "nonsense"), TK_MALFORMED);
}

}  // namespace
