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

// Command-line front end over the C interface.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tanglekit/tanglekit.h"

namespace {

struct Args {
  std::string input, graph, bipartitions, forbidden;
  std::vector<std::string> generate;
  std::string k;
  std::string out;
  bool dot = false;
  std::size_t bound = 16;
  bool unsafe_bounds = false;
  bool check_exclusive = false;
  bool trust_rich = false;
  bool cross_check_rich = false;
  bool in_s = false;
  bool refine = false;
  bool to_stdout = false;
  std::string trivial = "reject";
  std::string emit = "json";
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string output_dir(const Args& a) {
  if (!a.out.empty()) return a.out;
  if (const char* env = std::getenv("TANGLEKIT_OUT"); env && *env) return env;
  return ".";
}

int emit(const Args& a, const std::string& command, const std::string& json,
         const char* dot, int code) {
  std::filesystem::path dir = output_dir(a);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream(dir / (command + ".json"), std::ios::binary) << json;
  if (a.dot && dot) std::ofstream(dir / (command + ".dot"), std::ios::binary) << dot;
  if (a.to_stdout) std::cout << json;
  return code;
}

// Reports a failure that happened before a run could start.
int early_failure(const Args& a, const std::string& command, tk_status status) {
  std::cerr << "tanglekit " << command << ": " << tk_last_error() << "\n";
  return emit(a, command, tk_last_error_json(), nullptr,
              tk_status_exit_code(status));
}

int run(const Args& a, const std::string& command) {
  tk_source source = TK_SOURCE_AUTO;
  std::string path;
  int given = 0;
  if (!a.input.empty()) ++given, path = a.input, source = TK_SOURCE_AUTO;
  if (!a.graph.empty()) ++given, path = a.graph, source = TK_SOURCE_GRAPH;
  if (!a.bipartitions.empty())
    ++given, path = a.bipartitions, source = TK_SOURCE_BIPARTITIONS;
  if (given != 1) {
    std::cerr << "tanglekit " << command
              << ": give exactly one of --input, --graph, --bipartitions\n";
    return 1;
  }
  auto text = read_file(path);
  if (!text) {
    std::cerr << "tanglekit " << command << ": cannot read " << path << "\n";
    return 1;
  }
  tk_input* input = nullptr;
  if (tk_status st = tk_input_load(source, text->c_str(), &input); st != TK_OK)
    return early_failure(a, command, st);

  std::optional<std::string> family_text;
  if (!a.forbidden.empty()) {
    family_text = read_file(a.forbidden);
    if (!family_text) {
      std::cerr << "tanglekit " << command << ": cannot read " << a.forbidden << "\n";
      tk_input_free(input);
      return 1;
    }
  }
  tk_family* family = nullptr;
  if (tk_status st = tk_family_load(input, family_text ? family_text->c_str() : nullptr,
                                    &family);
      st != TK_OK) {
    tk_input_free(input);
    return early_failure(a, command, st);
  }
  for (const std::string& g : a.generate) tk_family_add_generator(family, g.c_str());

  tk_options opts;
  tk_options_init(&opts);
  opts.command = command.c_str();
  opts.k = a.k.empty() ? nullptr : a.k.c_str();
  opts.bound = a.bound;
  opts.unsafe_bounds = a.unsafe_bounds;
  opts.dot = a.dot;
  opts.check_exclusive = a.check_exclusive;
  opts.trust_rich = a.trust_rich;
  opts.cross_check_rich = a.cross_check_rich;
  opts.in_s = a.in_s;
  opts.refine = a.refine;
  opts.trivial = a.trivial == "drop"    ? TK_TRIVIAL_DROP
                 : a.trivial == "patch" ? TK_TRIVIAL_PATCH
                                        : TK_TRIVIAL_REJECT;
  tk_result* result = nullptr;
  tk_status st = tk_run(input, family, &opts, &result);
  tk_family_free(family);
  tk_input_free(input);
  if (st != TK_OK) return early_failure(a, command, st);
  int code = tk_result_exit_code(result);
  int rc = emit(a, command, tk_result_json(result), tk_result_dot(result), code);
  if (code != 0)
    std::cerr << "tanglekit " << command << ": exit " << code << " (see "
              << (std::filesystem::path(output_dir(a)) / (command + ".json")).string()
              << ")\n";
  tk_result_free(result);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tanglekit: tangles, tangle structure trees and duality"};
  app.set_version_flag("--version", tk_version());
  app.require_subcommand(1);
  Args args;
  const std::map<std::string, std::string> commands = {
      {"validate", "check the input structure and report its properties"},
      {"tangles", "enumerate the tangles"},
      {"tst", "build and validate the thorough tangle structure tree"},
      {"reduce", "reduce the thorough tree to an irreducible one"},
      {"duality", "tangle or certificate: F-tree and S-tree over F"},
      {"newduality", "the duality for families closed under shifting"},
      {"tot", "tree of tangles of S_k"},
      {"totins", "tree of tangles over the whole universe"},
      {"refine-order", "injective and structurally submodular refinements"}};
  std::string chosen;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", args.input, "system, bipartition or edge-list file");
    sub->add_option("--graph", args.graph, "edge-list file");
    sub->add_option("--bipartitions", args.bipartitions, "bipartition spec file");
    sub->add_option("--forbidden", args.forbidden, "family file");
    sub->add_option("--generate", args.generate,
                    "generators: R, R-full, profiles, graph-stars, standardize")
        ->delimiter(',');
    sub->add_option("--k", args.k, "order threshold (a rational)");
    sub->add_option("--out", args.out, "output directory (default $TANGLEKIT_OUT or .)");
    sub->add_flag("--dot", args.dot, "also write DOT");
    sub->add_option("--emit", args.emit, "json, or dot to also write DOT")
        ->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--bound", args.bound, "maximum separations for exhaustive modes")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--unsafe-bounds", args.unsafe_bounds, "allow --bound above 16");
    sub->add_flag("--check-exclusive", args.check_exclusive,
                  "verify the S-tree excludes every orientation");
    sub->add_flag("--trust-rich", args.trust_rich, "skip the richness check");
    sub->add_flag("--cross-check-rich", args.cross_check_rich,
                  "brute-force richness alongside closure under shifting");
    sub->add_flag("--in-s", args.in_s, "tangles: every level and the maximal tangles");
    sub->add_option("--trivial", args.trivial, "trivial elements: reject, drop or patch")
        ->check(CLI::IsMember({"reject", "drop", "patch"}));
    sub->add_flag("--refine", args.refine,
                  "replace the order by its injective submodular refinement");
    sub->add_flag("--stdout", args.to_stdout, "also print the JSON");
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (args.emit == "dot") args.dot = true;
  return run(args, chosen);
}
