#include "dwl/io.hpp"

#include <algorithm>
#include <sstream>

namespace dwl {

using nlohmann::json;
using nlohmann::ordered_json;

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long m = -1;
  std::vector<Arc> arcs;
  std::vector<std::pair<Arc, int>> arc_lines;

  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError("malformed header, expected \"n m\"", line_no);
      std::string rest;
      if (fields >> rest) throw ParseError("trailing data after header", line_no);
      continue;
    }
    int u, v;
    if (!(fields >> u >> v)) throw ParseError("malformed arc line, expected \"u v\"", line_no);
    std::string rest;
    if (fields >> rest) throw ParseError("trailing data after arc", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("arc endpoint out of range [0," + std::to_string(n) + ")", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    arc_lines.push_back({{u, v}, line_no});
  }
  if (n < 0) throw ParseError("missing header", 0);
  if (static_cast<long long>(arc_lines.size()) != m)
    throw ParseError("header promised " + std::to_string(m) + " arcs, found " +
                         std::to_string(arc_lines.size()),
                     0);
  std::sort(arc_lines.begin(), arc_lines.end());
  for (size_t i = 0; i < arc_lines.size(); ++i) {
    if (i > 0 && arc_lines[i].first == arc_lines[i - 1].first)
      throw ParseError("duplicate arc (" + std::to_string(arc_lines[i].first.first) + "," +
                           std::to_string(arc_lines[i].first.second) + ")",
                       arc_lines[i].second);
    arcs.push_back(arc_lines[i].first);
  }
  return Digraph(n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& g) {
  if (!g.has_dense_ids())
    throw InvalidInputError("serialize_digraph: vertex ids must be 0..n-1");
  std::ostringstream out;
  out << g.vertex_count() << " " << g.arc_count() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
  return out.str();
}

DecompositionKind kind_of(const AnyDecomposition& d) {
  if (std::holds_alternative<DirectedPathDecomposition>(d)) return DecompositionKind::Dpd;
  if (std::holds_alternative<DagDecomposition>(d)) return DecompositionKind::Dag;
  if (std::holds_alternative<KellyDecomposition>(d)) return DecompositionKind::Kelly;
  return DecompositionKind::Arboreal;
}

namespace {

ordered_json set_to_json(const VertexSet& s) { return ordered_json(s); }

struct JsonShape {
  Skeleton skeleton;
  std::vector<VertexSet> bags;
  std::vector<VertexSet> guards;    // kelly
  std::vector<VertexSet> arc_bags;  // arboreal
  VertexSet universe;
};

void write_common(ordered_json& j, const Skeleton& s, const std::vector<VertexSet>& bags) {
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < s.node_count; ++i)
    nodes.push_back(ordered_json{{"id", i}, {"bag", set_to_json(bags[i])}});
  j["nodes"] = std::move(nodes);
  ordered_json arcs = ordered_json::array();
  for (auto [a, b] : s.arcs) arcs.push_back(ordered_json{{"from", a}, {"to", b}});
  j["arcs"] = std::move(arcs);
}

VertexSet bags_union(const std::vector<VertexSet>& bags) {
  VertexSet u;
  for (const auto& b : bags) u = set_union(u, b);
  return u;
}

}  // namespace

ordered_json decomposition_to_json(const AnyDecomposition& d) {
  ordered_json j;
  switch (kind_of(d)) {
    case DecompositionKind::Dpd: {
      const auto& dpd = std::get<DirectedPathDecomposition>(d);
      j["kind"] = "dpd";
      j["universe"] = set_to_json(bags_union(dpd.bags));
      write_common(j, Skeleton::path(static_cast<int>(dpd.bags.size())), dpd.bags);
      break;
    }
    case DecompositionKind::Dag: {
      const auto& dag = std::get<DagDecomposition>(d);
      j["kind"] = "dag";
      j["universe"] = set_to_json(bags_union(dag.node_bags));
      write_common(j, dag.skeleton, dag.node_bags);
      break;
    }
    case DecompositionKind::Kelly: {
      const auto& k = std::get<KellyDecomposition>(d);
      j["kind"] = "kelly";
      j["universe"] = set_to_json(bags_union(k.node_bags));
      ordered_json nodes = ordered_json::array();
      for (int i = 0; i < k.skeleton.node_count; ++i)
        nodes.push_back(ordered_json{
            {"id", i}, {"bag", set_to_json(k.node_bags[i])}, {"guard", set_to_json(k.guard_bags[i])}});
      j["nodes"] = std::move(nodes);
      ordered_json arcs = ordered_json::array();
      for (auto [a, b] : k.skeleton.arcs) arcs.push_back(ordered_json{{"from", a}, {"to", b}});
      j["arcs"] = std::move(arcs);
      break;
    }
    case DecompositionKind::Arboreal: {
      const auto& a = std::get<ArborealDecomposition>(d);
      j["kind"] = "arboreal";
      j["universe"] = set_to_json(a.universe);
      ordered_json nodes = ordered_json::array();
      for (int i = 0; i < a.skeleton.node_count; ++i)
        nodes.push_back(ordered_json{{"id", i}, {"bag", set_to_json(a.node_bags[i])}});
      j["nodes"] = std::move(nodes);
      ordered_json arcs = ordered_json::array();
      for (size_t e = 0; e < a.skeleton.arcs.size(); ++e)
        arcs.push_back(ordered_json{{"from", a.skeleton.arcs[e].first},
                                    {"to", a.skeleton.arcs[e].second},
                                    {"bag", set_to_json(a.arc_bags[e])}});
      j["arcs"] = std::move(arcs);
      break;
    }
  }
  return j;
}

namespace {

void require_keys(const json& j, const std::vector<std::string>& keys, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object", path);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
      throw SchemaError("unknown key \"" + it.key() + "\"", path);
  for (const auto& k : keys)
    if (!j.contains(k)) throw SchemaError("missing key \"" + k + "\"", path);
}

VertexSet read_set(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError("expected an array of ints", path);
  VertexSet out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw SchemaError("expected an integer", path + "[" + std::to_string(i) + "]");
    out.push_back(j[i].get<int>());
  }
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw SchemaError("array must be strictly ascending", path);
  return out;
}

int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError("expected an integer", path);
  return j.get<int>();
}

}  // namespace

AnyDecomposition decomposition_from_json(const json& j) {
  require_keys(j, {"kind", "universe", "nodes", "arcs"}, "$");
  if (!j["kind"].is_string()) throw SchemaError("expected a string", "$.kind");
  std::string kind = j["kind"].get<std::string>();
  VertexSet universe = read_set(j["universe"], "$.universe");

  bool kelly = kind == "kelly";
  bool arboreal = kind == "arboreal";
  if (kind != "dpd" && kind != "dag" && !kelly && !arboreal)
    throw SchemaError("kind must be one of dpd|dag|kelly|arboreal", "$.kind");

  if (!j["nodes"].is_array()) throw SchemaError("expected an array", "$.nodes");
  struct NodeRow {
    int id;
    VertexSet bag, guard;
  };
  std::vector<NodeRow> rows;
  for (size_t i = 0; i < j["nodes"].size(); ++i) {
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    const json& node = j["nodes"][i];
    if (kelly)
      require_keys(node, {"id", "bag", "guard"}, path);
    else
      require_keys(node, {"id", "bag"}, path);
    NodeRow row;
    row.id = read_int(node["id"], path + ".id");
    row.bag = read_set(node["bag"], path + ".bag");
    if (kelly) row.guard = read_set(node["guard"], path + ".guard");
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const NodeRow& a, const NodeRow& b) { return a.id < b.id; });
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].id == rows[i - 1].id)
      throw SchemaError("duplicate node id " + std::to_string(rows[i].id), "$.nodes");
  }
  std::vector<int> relabel;  // sorted original ids; position = new id
  for (const auto& r : rows) relabel.push_back(r.id);
  auto new_id = [&](int id, const std::string& path) {
    auto it = std::lower_bound(relabel.begin(), relabel.end(), id);
    if (it == relabel.end() || *it != id)
      throw SchemaError("arc references unknown node " + std::to_string(id), path);
    return static_cast<int>(it - relabel.begin());
  };

  if (!j["arcs"].is_array()) throw SchemaError("expected an array", "$.arcs");
  std::vector<std::pair<int, int>> arcs;
  std::vector<VertexSet> arc_bags;
  for (size_t i = 0; i < j["arcs"].size(); ++i) {
    std::string path = "$.arcs[" + std::to_string(i) + "]";
    const json& arc = j["arcs"][i];
    if (arboreal)
      require_keys(arc, {"from", "to", "bag"}, path);
    else
      require_keys(arc, {"from", "to"}, path);
    int a = new_id(read_int(arc["from"], path + ".from"), path + ".from");
    int b = new_id(read_int(arc["to"], path + ".to"), path + ".to");
    arcs.emplace_back(a, b);
    if (arboreal) arc_bags.push_back(read_set(arc["bag"], path + ".bag"));
  }
  // Sort arcs, keep arc bags aligned.
  std::vector<size_t> perm(arcs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return arcs[a] < arcs[b]; });
  std::vector<std::pair<int, int>> sorted_arcs;
  std::vector<VertexSet> sorted_bags;
  for (size_t i : perm) {
    sorted_arcs.push_back(arcs[i]);
    if (arboreal) sorted_bags.push_back(arc_bags[i]);
  }

  Skeleton skeleton;
  skeleton.node_count = static_cast<int>(rows.size());
  skeleton.arcs = std::move(sorted_arcs);

  std::vector<VertexSet> bags, guards;
  for (auto& r : rows) {
    bags.push_back(std::move(r.bag));
    guards.push_back(std::move(r.guard));
  }

  auto check_universe = [&](const VertexSet& from_bags) {
    if (from_bags != universe)
      throw SchemaError("universe does not match the union of node bags", "$.universe");
  };

  try {
    if (kind == "dpd") {
      skeleton.kind = SkeletonKind::Path;
      skeleton.check();
      check_universe(bags_union(bags));
      // Bags indexed along the path: node order must follow the path order.
      std::vector<VertexSet> path_bags(bags.size());
      std::vector<int> position(bags.size(), 0);
      for (auto [a, b] : skeleton.arcs) position[b] = 1;  // non-roots
      int root = -1;
      for (size_t i = 0; i < bags.size(); ++i)
        if (position[i] == 0) root = static_cast<int>(i);
      auto ch = skeleton.children();
      int at = root, idx = 0;
      while (at >= 0 && idx < static_cast<int>(bags.size())) {
        path_bags[idx++] = bags[at];
        at = ch[at].empty() ? -1 : ch[at][0];
      }
      return DirectedPathDecomposition{std::move(path_bags)};
    }
    if (kind == "dag") {
      skeleton.kind = SkeletonKind::Dag;
      skeleton.check();
      check_universe(bags_union(bags));
      return DagDecomposition{std::move(skeleton), std::move(bags)};
    }
    if (kelly) {
      skeleton.kind = SkeletonKind::Dag;
      skeleton.check();
      check_universe(bags_union(bags));
      return KellyDecomposition{std::move(skeleton), std::move(bags), std::move(guards)};
    }
    skeleton.kind = SkeletonKind::Arborescence;
    skeleton.check();
    return ArborealDecomposition{std::move(skeleton), std::move(bags), std::move(sorted_bags),
                                 std::move(universe)};
  } catch (const InvalidInputError& e) {
    throw SchemaError(e.what(), "$");
  }
}

std::string decomposition_to_string(const AnyDecomposition& d) {
  return decomposition_to_json(d).dump(2) + "\n";
}

AnyDecomposition decomposition_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what(), "$");
  }
  return decomposition_from_json(j);
}

}  // namespace dwl
