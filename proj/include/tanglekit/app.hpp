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


// Batch runs: one subcommand over one input, producing JSON and DOT.

#ifndef TANGLEKIT_APP_HPP_
#define TANGLEKIT_APP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/duality.hpp"
#include "tanglekit/forbidden.hpp"
#include "tanglekit/io.hpp"
#include "tanglekit/order_function.hpp"

namespace tanglekit {

inline constexpr std::size_t kCliBound = 16;

enum class InputSource { kAuto, kSystem, kGraph, kBipartitions };

struct RunSpec {
  std::string command;
  InputSource source = InputSource::kAuto;
  std::string input;                  // text of the input file
  std::optional<std::string> family;  // text of a family@1 document
  std::vector<std::string> generate;  // extra generators
  Threshold k;                        // nullopt: no threshold
  bool dot = false;
  std::size_t bound = kCliBound;
  bool unsafe_bounds = false;
  bool check_exclusive = false;
  bool trust_rich = false;
  bool cross_check_rich = false;
  bool in_s = false;  // tangles: all levels and the maximal tangles
  bool refine = false;  // replace the order by its injective refinement
  TrivialPolicy trivial = TrivialPolicy::kReject;
};

struct Artifacts {
  int exit_code = 0;
  std::string json;
  std::optional<std::string> dot;
};

const std::vector<std::string>& commands();
const std::vector<std::string>& generators();

// Throws kMalformed when the run description itself is unusable.
void check_run_spec(const RunSpec& spec);

// The family of the run over `system`: explicit members inside the
// system, then generators ("R", "R-full" keeping degenerate triples,
// "profiles", "graph-stars"), then "standardize" if requested.
ForbiddenFamily build_family(const io::Input& input,
                             const SeparationSystem& system,
                             const io::FamilySpec& spec,
                             const std::vector<std::string>& extra);

// Never throws; failures are reported in the artifacts.
Artifacts run(const RunSpec& spec);
Artifacts run(const io::Input& input, const RunSpec& spec);

}  // namespace tanglekit

#endif  // TANGLEKIT_APP_HPP_
