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

#include "tanglekit/io.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tanglekit/rational.hpp"

namespace tanglekit::io {

namespace {

[[noreturn]] void malformed(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kMalformed, "field '" + field + "': " + what);
}

const Json& need(const Json& j, const std::string& key,
                 const std::string& field) {
  if (!j.is_object()) malformed(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(field + "." + key, "missing");
  return *it;
}

void check_schema(const Json& doc, std::string_view schema) {
  if (!doc.is_object()) malformed("$", "expected an object");
  auto it = doc.find("schema");
  if (it == doc.end() || !it->is_string())
    malformed("schema", "missing; expected \"" + std::string(schema) + "\"");
  if (it->get<std::string>() != schema)
    malformed("schema", "expected \"" + std::string(schema) + "\", got \"" +
                            it->get<std::string>() + "\"");
}

// Oriented separations are referred to by id; labels are accepted too.
struct Index {
  std::size_t n = 0;
  std::map<std::string, Oriented> labels;
};

Index label_index(const SeparationSystem& system) {
  Index out;
  out.n = system.ambient_size();
  for (Oriented a = 0; a < out.n; ++a) out.labels.emplace(system.label(a), a);
  return out;
}

Oriented lookup(const Index& index, const Json& j, const std::string& field) {
  if (j.is_number_unsigned()) {
    if (j.get<std::size_t>() >= index.n)
      malformed(field, "id " + std::to_string(j.get<std::size_t>()) +
                           " out of range");
    return j.get<Oriented>();
  }
  if (!j.is_string()) malformed(field, "expected an oriented separation id");
  auto it = index.labels.find(j.get<std::string>());
  if (it == index.labels.end())
    malformed(field, "unknown separation \"" + j.get<std::string>() + "\"");
  return it->second;
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      malformed(field, e.what());
    }
  }
  malformed(field, "expected an integer or a rational string");
}

// A binary operation as [a, b, a op b] triples covering every ordered pair.
std::vector<Oriented> table_from_json(const Json& j, const Index& index,
                                      const std::string& field) {
  const std::size_t n = index.n;
  if (!j.is_array()) malformed(field, "expected an array of triples");
  std::vector<Oriented> out(n * n, kNoOriented);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string f = field + "[" + std::to_string(i) + "]";
    const Json& t = j[i];
    if (!t.is_array() || t.size() != 3) malformed(f, "expected [a, b, c]");
    Oriented a = lookup(index, t[0], f + "[0]");
    Oriented b = lookup(index, t[1], f + "[1]");
    Oriented c = lookup(index, t[2], f + "[2]");
    if (out[a * n + b] != kNoOriented && out[a * n + b] != c)
      malformed(f, "pair given twice with different values");
    out[a * n + b] = c;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (out[a * n + b] == kNoOriented)
        malformed(field, "no entry for (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
  return out;
}

Json table_to_json(const std::vector<Oriented>& t, std::size_t n) {
  Json out = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.push_back(Json::array({a, b, t[a * n + b]}));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::kMalformed, "line " + std::to_string(line) +
                                           ", column " + std::to_string(col) +
                                           ": invalid JSON");
  }
}

bool equal(const Input& a, const Input& b) {
  const SeparationSystem &s = a.system, &t = b.system;
  if (s.ambient_size() != t.ambient_size() || s.members() != t.members())
    return false;
  for (Oriented x = 0; x < s.ambient_size(); ++x)
    if (s.inv(x) != t.inv(x) || s.up(x) != t.up(x) || s.label(x) != t.label(x))
      return false;
  if (a.universe.has_value() != b.universe.has_value()) return false;
  if (a.universe && (a.universe->join_table() != b.universe->join_table() ||
                     a.universe->meet_table() != b.universe->meet_table()))
    return false;
  if (a.order != b.order) return false;
  if (a.graph.has_value() != b.graph.has_value()) return false;
  if (a.graph && (a.graph->graph.vertices != b.graph->graph.vertices ||
                  a.graph->graph.edges != b.graph->graph.edges ||
                  a.graph->sides != b.graph->sides))
    return false;
  return true;
}

Input parse_system(const Json& doc) {
  check_schema(doc, kSystemSchema);
  const Json& oriented = need(doc, "oriented", "$");
  if (!oriented.is_array() || oriented.empty())
    malformed("oriented", "expected a non-empty array");
  const std::size_t n = oriented.size();
  if (n > kMaxOriented)
    throw Error(ErrorKind::kBound, "at most " + std::to_string(kMaxOriented) +
                                       " oriented separations are supported");
  std::vector<std::string> labels(n);
  std::vector<Oriented> inv(n, kNoOriented);
  std::vector<bool> seen(n, false);
  Index index;
  index.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::string f = "oriented[" + std::to_string(i) + "]";
    const Json& e = oriented[i];
    const Json& id = need(e, "id", f);
    const Json& iv = need(e, "inv", f);
    if (!id.is_number_unsigned() || id.get<std::size_t>() >= n)
      malformed(f + ".id", "expected an id below " + std::to_string(n));
    if (!iv.is_number_unsigned() || iv.get<std::size_t>() >= n)
      malformed(f + ".inv", "expected an id below " + std::to_string(n));
    Oriented a = id.get<Oriented>();
    if (seen[a]) malformed(f + ".id", "duplicate id " + std::to_string(a));
    seen[a] = true;
    inv[a] = iv.get<Oriented>();
    if (auto l = e.find("label"); l != e.end()) {
      if (!l->is_string()) malformed(f + ".label", "expected a string");
      labels[a] = l->get<std::string>();
    }
  }
  for (Oriented a = 0; a < n; ++a) {
    if (labels[a].empty()) labels[a] = std::to_string(a);
    if (!index.labels.emplace(labels[a], a).second)
      malformed("oriented", "duplicate label \"" + labels[a] + "\"");
  }

  std::vector<std::pair<Oriented, Oriented>> leq;
  if (auto it = doc.find("leq"); it != doc.end()) {
    if (!it->is_array()) malformed("leq", "expected an array of pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string f = "leq[" + std::to_string(i) + "]";
      const Json& p = (*it)[i];
      if (!p.is_array() || p.size() != 2) malformed(f, "expected a pair");
      leq.emplace_back(lookup(index, p[0], f + "[0]"),
                       lookup(index, p[1], f + "[1]"));
    }
  }

  Input in;
  SeparationSystem full = SeparationSystem::create(n, inv, leq, labels);
  in.system = full;

  if (doc.contains("join") || doc.contains("meet")) {
    in.universe = Universe::create(
        full, table_from_json(need(doc, "join", "$"), index, "join"),
        table_from_json(need(doc, "meet", "$"), index, "meet"));
  } else if (auto it = doc.find("lattice"); it != doc.end()) {
    if (*it != "derive") malformed("lattice", "expected \"derive\"");
    in.universe = Universe::from_poset(full);
  }

  if (auto it = doc.find("order"); it != doc.end())
    in.order = order_from_json(full, *it, "order");

  if (auto it = doc.find("graph"); it != doc.end()) {
    GraphData g;
    const Json& vs = need(*it, "vertices", "graph");
    const Json& es = need(*it, "edges", "graph");
    const Json& ss = need(*it, "sides", "graph");
    if (!vs.is_array() || !es.is_array() || !ss.is_array() || ss.size() != n)
      malformed("graph", "expected vertices, edges and one side pair per element");
    for (const Json& v : vs) {
      if (!v.is_string()) malformed("graph.vertices", "expected names");
      g.graph.vertices.push_back(v.get<std::string>());
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      const Json& e = es[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
          !e[1].is_number_unsigned() ||
          e[0].get<std::size_t>() >= g.graph.vertices.size() ||
          e[1].get<std::size_t>() >= g.graph.vertices.size())
        malformed("graph.edges[" + std::to_string(i) + "]",
                  "expected a pair of vertex indices");
      g.graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const Json& s = ss[i];
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() ||
          !s[1].is_number_unsigned())
        malformed("graph.sides[" + std::to_string(i) + "]",
                  "expected a pair of vertex masks");
      g.sides.emplace_back(s[0].get<std::uint32_t>(), s[1].get<std::uint32_t>());
    }
    in.graph = std::move(g);
  }

  if (auto it = doc.find("members"); it != doc.end()) {
    OrientedSet keep = set_from_json(full, *it, "members");
    in.system = full.restrict(keep);
  }
  return in;
}

Input parse_system_text(std::string_view text) { return parse_system(parse_json(text)); }

Input parse_graph(std::string_view text) {
  Graph g = Graph::parse_edge_list(text);
  GraphUniverse gu = graph_universe(g);
  Input in;
  in.system = gu.universe.system();
  in.universe = gu.universe;
  in.order = gu.order;
  in.graph = GraphData{std::move(g), std::move(gu.sides)};
  return in;
}

Input parse_bipartitions(const Json& doc) {
  check_schema(doc, kBipartitionSchema);
  const Json& nj = need(doc, "n", "$");
  if (!nj.is_number_unsigned() || nj.get<std::size_t>() == 0)
    malformed("n", "expected a positive ground set size");
  const std::size_t n = nj.get<std::size_t>();
  Input in;
  Universe u = bipartition_universe(n);
  in.system = u.system();
  in.universe = u;
  auto it = doc.find("order");
  if (it == doc.end()) return in;
  const Json& o = *it;
  if (!o.is_object()) malformed("order", "expected an object");
  if (o.contains("cut")) {
    // order(A|B) = total weight of the pairs {x, y} with x in A, y in B
    const Json& cut = o["cut"];
    if (!cut.is_array()) malformed("order.cut", "expected an array of pairs");
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> edges;
    for (std::size_t i = 0; i < cut.size(); ++i) {
      std::string f = "order.cut[" + std::to_string(i) + "]";
      const Json& e = cut[i];
      if (!e.is_array() || e.size() < 2 || e.size() > 3) malformed(f, "expected [x, y] or [x, y, w]");
      for (std::size_t k = 0; k < 2; ++k)
        if (!e[k].is_number_unsigned() || e[k].get<std::size_t>() == 0 ||
            e[k].get<std::size_t>() > n)
          malformed(f, "ground elements are numbered 1.." + std::to_string(n));
      Rational w = e.size() == 3 ? rational_from_json(e[2], f + "[2]") : Rational(1);
      if (w < 0) malformed(f, "weights must be non-negative");
      edges.emplace_back(e[0].get<std::size_t>() - 1, e[1].get<std::size_t>() - 1, w);
    }
    std::vector<Rational> by_sep(in.system.num_separations());
    for (SepId s : in.system.separations()) {
      Oriented a = in.system.orientations(s)[0];
      Rational v = 0;
      for (const auto& [x, y, w] : edges)
        if ((a >> x & 1u) != (a >> y & 1u)) v += w;
      by_sep[s] = v;
    }
    in.order = OrderFunction(in.system, std::move(by_sep));
  } else if (o.contains("values")) {
    in.order = order_from_json(in.system, o["values"], "order.values");
  } else {
    malformed("order", "expected \"cut\" or \"values\"");
  }
  return in;
}

Input parse_bipartitions_text(std::string_view text) {
  return parse_bipartitions(parse_json(text));
}

Input parse_input(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{')
    return parse_graph(text);
  Json doc = parse_json(text);
  if (doc.is_object() && doc.value("schema", "") == kBipartitionSchema)
    return parse_bipartitions(doc);
  return parse_system(doc);
}

Json set_to_json(const SeparationSystem& system, const OrientedSet& sigma) {
  Json out = Json::array();
  (void)system;
  for (Oriented a : sigma) out.push_back(a);
  return out;
}

OrientedSet set_from_json(const SeparationSystem& system, const Json& j,
                          const std::string& field) {
  if (!j.is_array()) malformed(field, "expected an array of labels");
  auto index = label_index(system);
  OrientedSet out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.insert(lookup(index, j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

// {"<separation id>": "p/q"}
Json order_to_json(const SeparationSystem& system, const OrderFunction& order) {
  Json out = Json::object();
  for (SepId s = 0; s < system.ambient_separations(); ++s)
    out[std::to_string(s)] = to_string(order(s));
  return out;
}

OrderFunction order_from_json(const SeparationSystem& system, const Json& j,
                              const std::string& field) {
  if (!j.is_object()) malformed(field, "expected {\"<separation id>\": value}");
  const std::size_t m = system.ambient_separations();
  std::vector<std::optional<Rational>> by_sep(m);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string f = field + "." + it.key();
    const std::string& key = it.key();
    if (key.empty() || key.size() > 9 ||
        key.find_first_not_of("0123456789") != std::string::npos ||
        std::stoul(key) >= m)
      malformed(f, "expected a separation id below " + std::to_string(m));
    by_sep[std::stoul(key)] = rational_from_json(it.value(), f);
  }
  std::vector<Rational> values;
  for (SepId s = 0; s < m; ++s) {
    if (!by_sep[s]) malformed(field, "no value for separation " + std::to_string(s));
    values.push_back(*by_sep[s]);
  }
  return OrderFunction(system, std::move(values));
}

Json system_to_json(const Input& input) {
  const SeparationSystem& s = input.system;
  const std::size_t n = s.ambient_size();
  Json out;
  out["schema"] = kSystemSchema;
  Json oriented = Json::array(), leq = Json::array();
  for (Oriented a = 0; a < n; ++a) {
    oriented.push_back({{"id", a}, {"inv", s.inv(a)}, {"label", s.label(a)}});
    for (Oriented b : s.up(a))
      if (b != a) leq.push_back(Json::array({a, b}));
  }
  out["oriented"] = std::move(oriented);
  out["leq"] = std::move(leq);
  if (s.members() != OrientedSet::prefix(n)) out["members"] = set_to_json(s, s.members());
  if (input.universe) {
    out["join"] = table_to_json(input.universe->join_table(), n);
    out["meet"] = table_to_json(input.universe->meet_table(), n);
  }
  if (input.order) out["order"] = order_to_json(s, *input.order);
  if (input.graph) {
    Json g;
    g["vertices"] = input.graph->graph.vertices;
    Json es = Json::array(), ss = Json::array();
    for (auto [a, b] : input.graph->graph.edges) es.push_back(Json::array({a, b}));
    for (auto [a, b] : input.graph->sides) ss.push_back(Json::array({a, b}));
    g["edges"] = std::move(es);
    g["sides"] = std::move(ss);
    out["graph"] = std::move(g);
  }
  return out;
}

namespace {

std::optional<Provenance> provenance_from(std::string_view name) {
  for (Provenance p : {Provenance::kExplicit, Provenance::kRobustness,
                       Provenance::kProfile, Provenance::kStandardize,
                       Provenance::kGraphStars})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

}  // namespace

FamilySpec parse_family(const SeparationSystem& system, const Json& doc) {
  check_schema(doc, kFamilySchema);
  FamilySpec out;
  std::vector<Provenance> provenance;
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_array()) malformed("provenance", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& pv = (*it)[i];
      auto parsed = pv.is_string() ? provenance_from(pv.get<std::string>())
                                   : std::nullopt;
      if (!parsed)
        malformed("provenance[" + std::to_string(i) + "]", "unknown provenance");
      provenance.push_back(*parsed);
    }
  }
  if (auto it = doc.find("sets"); it != doc.end()) {
    if (!it->is_array()) malformed("sets", "expected an array of id arrays");
    if (!provenance.empty() && provenance.size() != it->size())
      malformed("provenance", "expected one entry per set");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string f = "sets[" + std::to_string(i) + "]";
      out.family.add(set_from_json(system, (*it)[i], f),
                     provenance.empty() ? Provenance::kExplicit : provenance[i]);
    }
  }
  if (auto it = doc.find("generate"); it != doc.end()) {
    if (!it->is_array()) malformed("generate", "expected an array of names");
    for (const Json& g : *it) {
      if (!g.is_string()) malformed("generate", "expected generator names");
      out.generate.push_back(g.get<std::string>());
    }
  }
  return out;
}

FamilySpec parse_family_text(const SeparationSystem& system,
                              std::string_view text) {
  return parse_family(system, parse_json(text));
}

Json family_to_json(const SeparationSystem& system,
                    const ForbiddenFamily& family) {
  Json out;
  out["schema"] = kFamilySchema;
  Json sets = Json::array(), provenance = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    sets.push_back(set_to_json(system, family.members()[i]));
    provenance.push_back(std::string(to_string(family.provenance()[i])));
  }
  out["sets"] = std::move(sets);
  out["provenance"] = std::move(provenance);
  return out;
}

bool equal(const ForbiddenFamily& a, const ForbiddenFamily& b) {
  return a.members() == b.members() && a.provenance() == b.provenance();
}

// Edge ids are the ids of their lower ends.
Json tree_to_json(const SeparationSystem& system, const SeparationTree& tree,
                  const std::vector<std::optional<LeafClass>>* leaf_class) {
  Json out;
  out["schema"] = kTreeSchema;
  out["root"] = tree.root();
  Json nodes = Json::array(), beta = Json::object(), classes = Json::object();
  for (NodeId v = 0; v < tree.size(); ++v) {
    nodes.push_back({{"id", v}, {"children", tree.children(v)}});
    if (v != tree.root()) beta[std::to_string(v)] = tree.label(v);
    if (leaf_class && v < leaf_class->size() && (*leaf_class)[v]) {
      const LeafClass& c = *(*leaf_class)[v];
      classes[std::to_string(v)] = {{"kind", std::string(to_string(c.kind))},
                                    {"witness", set_to_json(system, c.witness)}};
    }
  }
  out["nodes"] = std::move(nodes);
  out["beta"] = std::move(beta);
  if (leaf_class) out["leafClass"] = std::move(classes);
  return out;
}

SeparationTree tree_from_json(const SeparationSystem& system, const Json& doc) {
  check_schema(doc, kTreeSchema);
  const Json& nodes = need(doc, "nodes", "$");
  const Json& rj = need(doc, "root", "$");
  const Json& beta = need(doc, "beta", "$");
  if (!nodes.is_array() || nodes.empty()) malformed("nodes", "expected a non-empty array");
  if (!beta.is_object()) malformed("beta", "expected {\"<edge>\": id}");
  const std::size_t n = nodes.size();
  if (!rj.is_number_unsigned() || rj.get<std::size_t>() >= n)
    malformed("root", "expected a node id");
  Index index = label_index(system);
  NodeId root = rj.get<NodeId>();
  std::vector<NodeId> parents(n, kNoNode);
  std::vector<Oriented> labels(n, kNoOriented);
  for (std::size_t i = 0; i < n; ++i) {
    std::string f = "nodes[" + std::to_string(i) + "]";
    const Json& id = need(nodes[i], "id", f);
    if (!id.is_number_unsigned() || id.get<std::size_t>() != i)
      malformed(f + ".id", "ids must be 0..n-1 in order");
    const Json& ch = need(nodes[i], "children", f);
    if (!ch.is_array()) malformed(f + ".children", "expected an array");
    for (const Json& c : ch) {
      if (!c.is_number_unsigned() || c.get<std::size_t>() >= n)
        malformed(f + ".children", "expected node ids");
      NodeId w = c.get<NodeId>();
      if (parents[w] != kNoNode || w == root)
        malformed(f + ".children", "node " + std::to_string(w) +
                                       " has more than one parent");
      parents[w] = static_cast<NodeId>(i);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parents[v] == kNoNode)
      malformed("nodes", "node " + std::to_string(v) + " has no parent");
    auto it = beta.find(std::to_string(v));
    if (it == beta.end()) malformed("beta." + std::to_string(v), "missing");
    labels[v] = lookup(index, *it, "beta." + std::to_string(v));
  }
  SeparationTree t = SeparationTree::from_parents(root, parents, labels);
  // Children are stored in the order given.
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> given;
    for (const Json& c : nodes[v]["children"]) given.push_back(c.get<NodeId>());
    if (given != t.children(v))
      malformed("nodes[" + std::to_string(v) + "].children",
                "children must be listed in increasing id order");
  }
  return t;
}

// Oriented edge 2e runs a -> b, 2e + 1 runs b -> a.
Json stree_to_json(const SeparationSystem& system, const STree& tree) {
  Json out;
  out["schema"] = kSTreeSchema;
  Json nodes = Json::array(), edges = Json::array(), alpha = Json::object();
  for (std::size_t t = 0; t < tree.num_nodes(); ++t) nodes.push_back({{"id", t}});
  for (std::size_t e = 0; e < tree.num_edges(); ++e) {
    const STreeEdge& x = tree.edges()[e];
    edges.push_back({{"id", e}, {"a", x.a}, {"b", x.b}});
    alpha[std::to_string(2 * e)] = x.alpha;
    alpha[std::to_string(2 * e + 1)] = system.inv(x.alpha);
  }
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  out["alpha"] = std::move(alpha);
  return out;
}

STree stree_from_json(const SeparationSystem& system, const Json& doc) {
  check_schema(doc, kSTreeSchema);
  const Json& nodes = need(doc, "nodes", "$");
  if (!nodes.is_array() || nodes.empty())
    malformed("nodes", "expected a non-empty array");
  const std::size_t n = nodes.size();
  for (std::size_t t = 0; t < n; ++t) {
    const Json& id = need(nodes[t], "id", "nodes[" + std::to_string(t) + "]");
    if (!id.is_number_unsigned() || id.get<std::size_t>() != t)
      malformed("nodes[" + std::to_string(t) + "].id", "ids must be 0..n-1 in order");
  }
  STree out(n);
  const Json& edges = need(doc, "edges", "$");
  const Json& alpha = need(doc, "alpha", "$");
  if (!edges.is_array()) malformed("edges", "expected an array");
  if (!alpha.is_object()) malformed("alpha", "expected {\"<oriented edge>\": id}");
  Index index = label_index(system);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string f = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    const Json& id = need(e, "id", f);
    if (!id.is_number_unsigned() || id.get<std::size_t>() != i)
      malformed(f + ".id", "ids must be 0..m-1 in order");
    const Json& a = need(e, "a", f);
    const Json& b = need(e, "b", f);
    if (!a.is_number_unsigned() || a.get<std::size_t>() >= n ||
        !b.is_number_unsigned() || b.get<std::size_t>() >= n)
      malformed(f, "endpoints must be node ids");
    std::string fwd = std::to_string(2 * i), back = std::to_string(2 * i + 1);
    auto af = alpha.find(fwd);
    if (af == alpha.end()) malformed("alpha." + fwd, "missing");
    Oriented x = lookup(index, *af, "alpha." + fwd);
    if (auto ab = alpha.find(back); ab != alpha.end() &&
                                    lookup(index, *ab, "alpha." + back) != system.inv(x))
      throw Error(ErrorKind::kValidation,
                  "alpha(e*) must be alpha(e)* on edge " + std::to_string(i));
    out.add_edge(a.get<std::uint32_t>(), b.get<std::uint32_t>(), x);
  }
  return out;
}

Json error_to_json(const Error& error, const SeparationSystem* system) {
  Json out;
  out["schema"] = kErrorSchema;
  out["kind"] = std::string(to_string(error.kind()));
  out["exit_code"] = exit_code_for(error.kind());
  out["message"] = error.what();
  Json w = Json::array();
  for (const OrientedSet& s : error.witnesses()) {
    if (system && system->ambient_size() > 0) {
      bool in_range = true;
      for (Oriented a : s) in_range = in_range && a < system->ambient_size();
      if (in_range) {
        w.push_back(set_to_json(*system, s));
        continue;
      }
    }
    Json ids = Json::array();
    for (Oriented a : s) ids.push_back(a);
    w.push_back(std::move(ids));
  }
  out["witnesses"] = std::move(w);
  return out;
}

}  // namespace tanglekit::io
