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

#include "tanglekit/tanglekit.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tanglekit/app.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/io.hpp"
#include "tanglekit/rational.hpp"

struct tk_input {
  tanglekit::io::Input value;
};

struct tk_family {
  std::string text;  // empty: no explicit members
  std::vector<std::string> generators;
};

struct tk_result {
  tanglekit::Artifacts artifacts;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_json;

tk_status status_of(tanglekit::ErrorKind kind) {
  using tanglekit::ErrorKind;
  switch (kind) {
    case ErrorKind::kMalformed: return TK_MALFORMED;
    case ErrorKind::kValidation: return TK_VALIDATION;
    case ErrorKind::kBound: return TK_BOUND;
    case ErrorKind::kPrecondition: return TK_PRECONDITION;
    case ErrorKind::kNonInjectiveOrder: return TK_NON_INJECTIVE_ORDER;
    case ErrorKind::kNotStandard: return TK_NOT_STANDARD;
    case ErrorKind::kNotRich: return TK_NOT_RICH;
    case ErrorKind::kTrivialElementsPresent: return TK_TRIVIAL_ELEMENTS_PRESENT;
    case ErrorKind::kNotIrreducible: return TK_NOT_IRREDUCIBLE;
    case ErrorKind::kNonStarFamily: return TK_NON_STAR_FAMILY;
    case ErrorKind::kAmbiguity: return TK_AMBIGUITY;
    case ErrorKind::kRichnessViolation: return TK_RICHNESS_VIOLATION;
    case ErrorKind::kReductionStuck: return TK_REDUCTION_STUCK;
    case ErrorKind::kTheoremViolation: return TK_THEOREM_VIOLATION;
  }
  return TK_INTERNAL;
}

tk_status fail(const tanglekit::Error& e, const tanglekit::SeparationSystem* s) {
  g_error = e.what();
  g_error_json = tanglekit::io::error_to_json(e, s).dump(2) + "\n";
  return status_of(e.kind());
}

tk_status fail(tk_status status, const std::string& message) {
  g_error = message;
  tanglekit::io::Json j;
  j["schema"] = tanglekit::io::kErrorSchema;
  j["kind"] = tk_status_name(status);
  j["exit_code"] = tk_status_exit_code(status);
  j["message"] = message;
  j["witnesses"] = tanglekit::io::Json::array();
  g_error_json = j.dump(2) + "\n";
  return status;
}

template <typename F>
tk_status guarded(const tanglekit::SeparationSystem* s, F&& body) {
  try {
    body();
    return TK_OK;
  } catch (const tanglekit::Error& e) {
    return fail(e, s);
  } catch (const std::bad_alloc&) {
    return fail(TK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TK_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "1.0.0"; }

const char* tk_status_name(tk_status status) {
  switch (status) {
    case TK_OK: return "Ok";
    case TK_INVALID_ARGUMENT: return "InvalidArgument";
    case TK_INTERNAL: return "Internal";
    default: break;
  }
  using tanglekit::ErrorKind;
  for (int k = 0; k <= static_cast<int>(ErrorKind::kTheoremViolation); ++k) {
    auto kind = static_cast<ErrorKind>(k);
    if (status_of(kind) == status) return tanglekit::to_string(kind).data();
  }
  return "Unknown";
}

int tk_status_exit_code(tk_status status) {
  switch (status) {
    case TK_OK: return 0;
    case TK_INVALID_ARGUMENT: return 1;
    case TK_INTERNAL: return 2;
    default: break;
  }
  using tanglekit::ErrorKind;
  for (int k = 0; k <= static_cast<int>(ErrorKind::kTheoremViolation); ++k) {
    auto kind = static_cast<ErrorKind>(k);
    if (status_of(kind) == status) return tanglekit::exit_code_for(kind);
  }
  return 2;
}

const char* tk_last_error(void) { return g_error.c_str(); }
const char* tk_last_error_json(void) { return g_error_json.c_str(); }

tk_status tk_input_load(tk_source source, const char* text, tk_input** out) {
  if (!text || !out) return fail(TK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(nullptr, [&] {
    auto in = std::make_unique<tk_input>();
    std::string_view t(text);
    switch (source) {
      case TK_SOURCE_AUTO: in->value = tanglekit::io::parse_input(t); break;
      case TK_SOURCE_SYSTEM: in->value = tanglekit::io::parse_system_text(t); break;
      case TK_SOURCE_GRAPH: in->value = tanglekit::io::parse_graph(t); break;
      case TK_SOURCE_BIPARTITIONS:
        in->value = tanglekit::io::parse_bipartitions_text(t);
        break;
      default:
        throw tanglekit::Error(tanglekit::ErrorKind::kMalformed, "unknown input source");
    }
    *out = in.release();
  });
}

void tk_input_free(tk_input* input) { delete input; }

size_t tk_input_oriented(const tk_input* input) {
  return input ? input->value.system.size() : 0;
}

size_t tk_input_separations(const tk_input* input) {
  return input ? input->value.system.num_separations() : 0;
}

int tk_input_has_universe(const tk_input* input) {
  return input && input->value.universe.has_value();
}

int tk_input_has_order(const tk_input* input) {
  return input && input->value.order.has_value();
}

tk_status tk_input_to_json(const tk_input* input, char** out) {
  if (!input || !out) return fail(TK_INVALID_ARGUMENT, "null argument");
  return guarded(&input->value.system, [&] {
    std::string s = tanglekit::io::system_to_json(input->value).dump(2) + "\n";
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void tk_string_free(char* text) { delete[] text; }

tk_status tk_family_load(const tk_input* input, const char* json,
                         tk_family** out) {
  if (!input || !out) return fail(TK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(&input->value.system, [&] {
    auto f = std::make_unique<tk_family>();
    if (json) {
      f->text = json;
      tanglekit::io::parse_family_text(input->value.system, f->text);
    }
    *out = f.release();
  });
}

tk_status tk_family_add_generator(tk_family* family, const char* name) {
  if (!family || !name) return fail(TK_INVALID_ARGUMENT, "null argument");
  const auto& known = tanglekit::generators();
  if (std::find(known.begin(), known.end(), name) == known.end())
    return fail(TK_MALFORMED, std::string("unknown generator '") + name + "'");
  family->generators.emplace_back(name);
  return TK_OK;
}

void tk_family_free(tk_family* family) { delete family; }

void tk_options_init(tk_options* options) {
  if (!options) return;
  *options = tk_options{};
  options->command = "validate";
  options->bound = tanglekit::kCliBound;
  options->trivial = TK_TRIVIAL_REJECT;
}

tk_status tk_run(const tk_input* input, const tk_family* family,
                 const tk_options* options, tk_result** out) {
  if (!input || !options || !out || !options->command)
    return fail(TK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded(&input->value.system, [&] {
    tanglekit::RunSpec spec;
    spec.command = options->command;
    if (options->k) spec.k = tanglekit::parse_rational(options->k);
    spec.bound = options->bound;
    spec.unsafe_bounds = options->unsafe_bounds != 0;
    spec.dot = options->dot != 0;
    spec.check_exclusive = options->check_exclusive != 0;
    spec.trust_rich = options->trust_rich != 0;
    spec.cross_check_rich = options->cross_check_rich != 0;
    spec.in_s = options->in_s != 0;
    spec.refine = options->refine != 0;
    switch (options->trivial) {
      case TK_TRIVIAL_DROP: spec.trivial = tanglekit::TrivialPolicy::kDrop; break;
      case TK_TRIVIAL_PATCH: spec.trivial = tanglekit::TrivialPolicy::kPatch; break;
      default: spec.trivial = tanglekit::TrivialPolicy::kReject; break;
    }
    if (family) {
      if (!family->text.empty()) spec.family = family->text;
      spec.generate = family->generators;
    }
    auto r = std::make_unique<tk_result>();
    r->artifacts = tanglekit::run(input->value, spec);
    *out = r.release();
  });
}

int tk_result_exit_code(const tk_result* result) {
  return result ? result->artifacts.exit_code : 2;
}

const char* tk_result_json(const tk_result* result) {
  return result ? result->artifacts.json.c_str() : nullptr;
}

const char* tk_result_dot(const tk_result* result) {
  return result && result->artifacts.dot ? result->artifacts.dot->c_str()
                                         : nullptr;
}

void tk_result_free(tk_result* result) { delete result; }

}  // extern "C"
