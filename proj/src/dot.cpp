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

#include "tanglekit/dot.hpp"

#include <sstream>

namespace tanglekit {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const SeparationSystem& system, const SeparationTree& tree,
                     const std::vector<std::optional<LeafClass>>* leaf_class,
                     const std::vector<bool>* overlay) {
  std::ostringstream out;
  out << "digraph tst {\n  node [shape=circle];\n";
  for (NodeId v = 0; v < tree.size(); ++v) {
    out << "  n" << v << " [label=\"" << v << "\"";
    const LeafClass* c = nullptr;
    if (leaf_class && v < leaf_class->size() && (*leaf_class)[v])
      c = &*(*leaf_class)[v];
    if (c && tree.is_leaf(v)) {
      const char* color = c->kind == LeafKind::kTangle      ? "palegreen"
                          : c->kind == LeafKind::kForbidden ? "lightcoral"
                                                            : "lightgrey";
      out << ", shape=box, style=filled, fillcolor=" << color;
    } else if (overlay && v < overlay->size() && (*overlay)[v]) {
      out << ", style=filled, fillcolor=gold";
    }
    out << "];\n";
  }
  for (NodeId v : tree.preorder()) {
    if (v == tree.root()) continue;
    out << "  n" << tree.parent(v) << " -> n" << v
        << " [label=" << quote(system.label(tree.label(v))) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const SeparationSystem& system, const STree& tree) {
  std::ostringstream out;
  out << "digraph stree {\n  node [shape=circle];\n";
  for (std::size_t t = 0; t < tree.num_nodes(); ++t)
    out << "  t" << t << " [label=\"" << t << "\"];\n";
  for (const STreeEdge& e : tree.edges())
    out << "  t" << e.a << " -> t" << e.b
        << " [label=" << quote(system.label(e.alpha)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tanglekit
