#include "dwl/decomposition.hpp"

#include <algorithm>
#include <queue>

namespace dwl {

std::string skeleton_kind_name(SkeletonKind k) {
  switch (k) {
    case SkeletonKind::Dag: return "dag";
    case SkeletonKind::Path: return "path";
    case SkeletonKind::Arborescence: return "arborescence";
  }
  return "?";
}

std::string decomposition_kind_name(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::Dpd: return "dpd";
    case DecompositionKind::Dag: return "dag";
    case DecompositionKind::Kelly: return "kelly";
    case DecompositionKind::Arboreal: return "arboreal";
  }
  return "?";
}

Skeleton Skeleton::path(int length) {
  Skeleton s;
  s.kind = SkeletonKind::Path;
  s.node_count = length;
  for (int i = 0; i + 1 < length; ++i) s.arcs.emplace_back(i, i + 1);
  return s;
}

void Skeleton::check() const {
  if (node_count < 0) throw InvalidInputError("skeleton: negative node count");
  std::vector<int> indeg(node_count, 0), outdeg(node_count, 0);
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [a, b] = arcs[i];
    if (a < 0 || a >= node_count || b < 0 || b >= node_count)
      throw InvalidInputError("skeleton: arc endpoint out of range");
    if (a == b) throw InvalidInputError("skeleton: self-loop");
    if (i > 0 && arcs[i] == arcs[i - 1]) throw InvalidInputError("skeleton: duplicate arc");
    outdeg[a]++;
    indeg[b]++;
  }
  // Acyclicity via Kahn.
  std::vector<int> deg = indeg;
  std::vector<int> ready;
  for (int i = 0; i < node_count; ++i)
    if (deg[i] == 0) ready.push_back(i);
  int seen = 0;
  auto ch = children();
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : ch[v])
      if (--deg[w] == 0) ready.push_back(w);
  }
  if (seen != node_count) throw InvalidInputError("skeleton: cycle detected");

  if (kind == SkeletonKind::Path) {
    if (node_count == 0) return;
    for (int i = 0; i < node_count; ++i)
      if (indeg[i] > 1 || outdeg[i] > 1) throw InvalidInputError("skeleton: not a path");
    if (static_cast<int>(arcs.size()) != node_count - 1)
      throw InvalidInputError("skeleton: path must have n-1 arcs");
    // Acyclic + degrees <= 1 + n-1 arcs => a single directed path.
  } else if (kind == SkeletonKind::Arborescence) {
    if (node_count == 0) return;
    int roots_seen = 0;
    for (int i = 0; i < node_count; ++i) {
      if (indeg[i] == 0) ++roots_seen;
      if (indeg[i] > 1) throw InvalidInputError("skeleton: arborescence node with two parents");
    }
    if (roots_seen != 1) throw InvalidInputError("skeleton: arborescence must have a unique root");
    if (static_cast<int>(arcs.size()) != node_count - 1)
      throw InvalidInputError("skeleton: arborescence must have n-1 arcs");
  }
}

std::vector<int> Skeleton::roots() const {
  std::vector<int> indeg(node_count, 0);
  for (auto [a, b] : arcs) indeg[b]++;
  std::vector<int> out;
  for (int i = 0; i < node_count; ++i)
    if (indeg[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> Skeleton::sinks() const {
  std::vector<int> outdeg(node_count, 0);
  for (auto [a, b] : arcs) outdeg[a]++;
  std::vector<int> out;
  for (int i = 0; i < node_count; ++i)
    if (outdeg[i] == 0) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> Skeleton::children() const {
  std::vector<std::vector<int>> ch(node_count);
  for (auto [a, b] : arcs) ch[a].push_back(b);
  return ch;
}

std::vector<std::vector<int>> Skeleton::descendants() const {
  auto ch = children();
  std::vector<std::vector<int>> desc(node_count);
  for (int s = 0; s < node_count; ++s) {
    std::vector<bool> seen(node_count, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      desc[s].push_back(v);
      for (int w : ch[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(desc[s].begin(), desc[s].end());
  }
  return desc;
}

DagDecomposition DirectedPathDecomposition::as_dag() const {
  DagDecomposition d;
  d.skeleton = Skeleton::path(static_cast<int>(bags.size()));
  d.skeleton.kind = SkeletonKind::Dag;
  d.node_bags = bags;
  return d;
}

bool KellyDecomposition::is_path() const {
  if (skeleton.kind == SkeletonKind::Path) return true;
  try {
    Skeleton s = skeleton;
    s.kind = SkeletonKind::Path;
    s.check();
    return true;
  } catch (const InvalidInputError&) {
    return false;
  }
}

std::string Witness::to_string() const {
  std::string tag;
  switch (kind) {
    case Kind::Vertex: tag = "vertex"; break;
    case Kind::GraphArc: tag = "arc"; break;
    case Kind::SkeletonArc: tag = "skeleton-arc"; break;
    case Kind::Node: tag = "node"; break;
    case Kind::NodeTriple: tag = "nodes"; break;
  }
  std::string vals;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) vals += ",";
    vals += std::to_string(values[i]);
  }
  return tag + "(" + vals + ")";
}

bool ValidationReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict* ValidationReport::find(const std::string& condition) const {
  for (const auto& v : verdicts)
    if (v.condition == condition) return &v;
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : verdicts) {
    out += v.condition + ": " + (v.pass ? "pass" : "fail");
    if (v.witness) out += " at " + v.witness->to_string();
    out += "\n";
  }
  return out;
}

namespace {

void check_bags_in_graph(const Digraph& g, const std::vector<VertexSet>& bags) {
  for (const auto& bag : bags)
    for (int v : bag)
      if (!g.has_vertex(v))
        throw InvalidInputError("bag references unknown vertex " + std::to_string(v));
}

Verdict check_cover(const Digraph& g, const std::vector<VertexSet>& bags,
                    const std::string& label) {
  VertexSet covered;
  for (const auto& bag : bags) covered = set_union(covered, bag);
  VertexSet missing = set_diff(g.vertices(), covered);
  if (missing.empty()) return {label, true, std::nullopt};
  return {label, false, Witness{Witness::Kind::Vertex, {missing.front()}}};
}

// DGW-2 connectivity: for i ⪯ j ⪯ k, W_i ∩ W_k ⊆ W_j.
Verdict check_connectivity(const Skeleton& s, const std::vector<VertexSet>& bags,
                           const std::string& label) {
  auto desc = s.descendants();
  std::vector<std::vector<bool>> reach(s.node_count, std::vector<bool>(s.node_count, false));
  for (int i = 0; i < s.node_count; ++i)
    for (int j : desc[i]) reach[i][j] = true;
  for (int i = 0; i < s.node_count; ++i)
    for (int j = 0; j < s.node_count; ++j) {
      if (i == j || !reach[i][j]) continue;
      for (int k = 0; k < s.node_count; ++k) {
        if (j == k || !reach[j][k]) continue;
        VertexSet both = set_intersect(bags[i], bags[k]);
        VertexSet bad = set_diff(both, bags[j]);
        if (!bad.empty())
          return {label, false, Witness{Witness::Kind::NodeTriple, {i, j, k}}};
      }
    }
  return {label, true, std::nullopt};
}

// On failure returns the lexicographically smallest escaping arc of G.
// Callers guarantee w and x disjoint (the DGW-3 region excludes W_i).
std::optional<Arc> guarding_violation(const Digraph& g, const VertexSet& w, const VertexSet& x) {
  for (const auto& [u, v] : g.arcs())
    if (set_contains(w, u) && !set_contains(w, v) && !set_contains(x, v)) return Arc{u, v};
  return std::nullopt;
}

std::vector<VertexSet> subtree_unions(const Skeleton& s, const std::vector<VertexSet>& bags) {
  auto desc = s.descendants();
  std::vector<VertexSet> uni(s.node_count);
  for (int i = 0; i < s.node_count; ++i)
    for (int j : desc[i]) uni[i] = set_union(uni[i], bags[j]);
  return uni;
}

}  // namespace

ValidationReport validate_dag_decomposition(const Digraph& g, const DagDecomposition& d) {
  d.skeleton.check();  // any acyclic kind qualifies; a path is a DAG
  if (static_cast<int>(d.node_bags.size()) != d.skeleton.node_count)
    throw InvalidInputError("node bag count does not match skeleton");
  check_bags_in_graph(g, d.node_bags);

  ValidationReport report;
  report.verdicts.push_back(check_cover(g, d.node_bags, "DGW-1"));
  report.verdicts.push_back(check_connectivity(d.skeleton, d.node_bags, "DGW-2"));

  Verdict dgw3{"DGW-3", true, std::nullopt};
  auto uni = subtree_unions(d.skeleton, d.node_bags);
  std::optional<Arc> worst;
  for (auto [i, j] : d.skeleton.arcs) {
    VertexSet guard = set_intersect(d.node_bags[i], d.node_bags[j]);
    VertexSet region = set_diff(uni[j], d.node_bags[i]);
    if (auto arc = guarding_violation(g, region, guard))
      if (!worst || *arc < *worst) worst = arc;
  }
  for (int r : d.skeleton.roots()) {
    if (auto arc = guarding_violation(g, uni[r], {}))
      if (!worst || *arc < *worst) worst = arc;
  }
  if (worst) {
    dgw3.pass = false;
    dgw3.witness = Witness{Witness::Kind::GraphArc, {worst->first, worst->second}};
  }
  report.verdicts.push_back(std::move(dgw3));
  return report;
}

ValidationReport validate_dpd(const Digraph& g, const DirectedPathDecomposition& d) {
  Skeleton s = Skeleton::path(static_cast<int>(d.bags.size()));
  s.check();
  check_bags_in_graph(g, d.bags);

  ValidationReport report;
  report.verdicts.push_back(check_cover(g, d.bags, "DGW-1"));
  report.verdicts.push_back(check_connectivity(s, d.bags, "DGW-2"));

  // (DPW): arc (u,v) needs positions i <= j with u in bag i, v in bag j,
  // i.e. first occurrence of u no later than last occurrence of v.
  Verdict dpw{"DPW", true, std::nullopt};
  int l = static_cast<int>(d.bags.size());
  for (const auto& [u, v] : g.arcs()) {
    int first_u = -1, last_v = -1;
    for (int i = 0; i < l; ++i) {
      if (first_u < 0 && set_contains(d.bags[i], u)) first_u = i;
      if (set_contains(d.bags[i], v)) last_v = i;
    }
    if (first_u < 0 || last_v < 0 || first_u > last_v) {
      dpw.pass = false;
      dpw.witness = Witness{Witness::Kind::GraphArc, {u, v}};
      break;
    }
  }
  report.verdicts.push_back(std::move(dpw));
  return report;
}

ValidationReport validate_kelly(const Digraph& g, const KellyDecomposition& d) {
  d.skeleton.check();
  if (static_cast<int>(d.node_bags.size()) != d.skeleton.node_count ||
      static_cast<int>(d.guard_bags.size()) != d.skeleton.node_count)
    throw InvalidInputError("kelly: bag counts do not match skeleton");
  check_bags_in_graph(g, d.node_bags);
  check_bags_in_graph(g, d.guard_bags);

  ValidationReport report;

  // KW-1: node bags partition V(G).
  Verdict kw1{"KW-1", true, std::nullopt};
  {
    std::vector<int> count(g.vertices().empty() ? 0 : g.vertices().back() + 1, 0);
    std::optional<int> dup;
    for (const auto& bag : d.node_bags)
      for (int v : bag)
        if (++count[v] > 1 && (!dup || v < *dup)) dup = v;
    if (dup) {
      kw1.pass = false;
      kw1.witness = Witness{Witness::Kind::Vertex, {*dup}};
    } else {
      Verdict cover = check_cover(g, d.node_bags, "KW-1");
      if (!cover.pass) kw1 = cover;
    }
  }
  report.verdicts.push_back(std::move(kw1));

  auto uni = subtree_unions(d.skeleton, d.node_bags);

  // KW-2: X_i guards W_{⪰i}.
  Verdict kw2{"KW-2", true, std::nullopt};
  for (int i = 0; i < d.skeleton.node_count && kw2.pass; ++i) {
    if (!is_guarding(g, uni[i], d.guard_bags[i])) {
      kw2.pass = false;
      kw2.witness = Witness{Witness::Kind::Node, {i}};
    }
  }
  report.verdicts.push_back(std::move(kw2));

  // KW-3: admissible enumeration of children at each node, and of the roots.
  // Admissibility is monotone in the already-placed set, so greedy saturation
  // is complete: repeatedly place any child j with
  //   X_j ⊆ W_i ∪ X_i ∪ (union of placed subtrees).
  Verdict kw3{"KW-3", true, std::nullopt};
  auto ch = d.skeleton.children();
  auto saturate = [&](const std::vector<int>& items, VertexSet base) -> std::optional<int> {
    std::vector<bool> placed(items.size(), false);
    size_t done = 0;
    while (done < items.size()) {
      bool progress = false;
      for (size_t t = 0; t < items.size(); ++t) {
        if (placed[t]) continue;
        if (set_subset(d.guard_bags[items[t]], base)) {
          placed[t] = true;
          ++done;
          base = set_union(base, uni[items[t]]);
          progress = true;
        }
      }
      if (!progress) {
        for (size_t t = 0; t < items.size(); ++t)
          if (!placed[t]) return items[t];
        return items.front();
      }
    }
    return std::nullopt;
  };
  for (int i = 0; i < d.skeleton.node_count && kw3.pass; ++i) {
    if (ch[i].empty()) continue;
    std::vector<int> kids = ch[i];
    std::sort(kids.begin(), kids.end());
    if (auto stuck = saturate(kids, set_union(d.node_bags[i], d.guard_bags[i]))) {
      kw3.pass = false;
      kw3.witness = Witness{Witness::Kind::Node, {*stuck}};
    }
  }
  if (kw3.pass) {
    if (auto stuck = saturate(d.skeleton.roots(), {})) {
      kw3.pass = false;
      kw3.witness = Witness{Witness::Kind::Node, {*stuck}};
    }
  }
  report.verdicts.push_back(std::move(kw3));

  // (KPW) on path skeletons: X_j ⊆ W_i ∪ X_i along every skeleton arc.
  if (d.skeleton.kind == SkeletonKind::Path || d.is_path()) {
    Verdict kpw{"KPW", true, std::nullopt};
    for (auto [i, j] : d.skeleton.arcs) {
      if (!set_subset(d.guard_bags[j], set_union(d.node_bags[i], d.guard_bags[i]))) {
        kpw.pass = false;
        kpw.witness = Witness{Witness::Kind::SkeletonArc, {i, j}};
        break;
      }
    }
    report.verdicts.push_back(std::move(kpw));
  }
  return report;
}

ValidationReport validate_arboreal(const Digraph& g, const ArborealDecomposition& d) {
  d.skeleton.check();
  if (d.skeleton.kind != SkeletonKind::Arborescence)
    throw InvalidInputError("arboreal: skeleton kind must be arborescence");
  if (static_cast<int>(d.node_bags.size()) != d.skeleton.node_count ||
      d.arc_bags.size() != d.skeleton.arcs.size())
    throw InvalidInputError("arboreal: bag counts do not match skeleton");
  check_bags_in_graph(g, d.node_bags);
  check_bags_in_graph(g, d.arc_bags);
  for (int v : d.universe)
    if (!g.has_vertex(v)) throw InvalidInputError("arboreal: universe vertex not in graph");

  ValidationReport report;

  // DTW-1 against the decomposition's universe.
  Verdict dtw1{"DTW-1", true, std::nullopt};
  {
    std::optional<int> bad;
    VertexSet covered;
    for (const auto& bag : d.node_bags) {
      VertexSet overlap = set_intersect(covered, bag);
      if (!overlap.empty() && (!bad || overlap.front() < *bad)) bad = overlap.front();
      covered = set_union(covered, bag);
    }
    if (!bad) {
      VertexSet missing = set_diff(d.universe, covered);
      VertexSet extra = set_diff(covered, d.universe);
      if (!missing.empty()) bad = missing.front();
      if (!extra.empty() && (!bad || extra.front() < *bad)) bad = extra.front();
    }
    if (bad) {
      dtw1.pass = false;
      dtw1.witness = Witness{Witness::Kind::Vertex, {*bad}};
    }
  }
  report.verdicts.push_back(std::move(dtw1));

  // DTW-2: W_{≻e} is X_e-normal for every skeleton arc e.
  Verdict dtw2{"DTW-2", true, std::nullopt};
  auto uni = subtree_unions(d.skeleton, d.node_bags);
  for (size_t e = 0; e < d.skeleton.arcs.size(); ++e) {
    auto [i, j] = d.skeleton.arcs[e];
    if (!is_normal(g, uni[j], d.arc_bags[e])) {
      dtw2.pass = false;
      dtw2.witness = Witness{Witness::Kind::SkeletonArc, {i, j}};
      break;
    }
  }
  report.verdicts.push_back(std::move(dtw2));
  return report;
}

int width(const DagDecomposition& d) {
  size_t w = 0;
  for (const auto& bag : d.node_bags) w = std::max(w, bag.size());
  return static_cast<int>(w);
}

int width(const DirectedPathDecomposition& d) {
  size_t w = 0;
  for (const auto& bag : d.bags) w = std::max(w, bag.size());
  return static_cast<int>(w);
}

int width(const KellyDecomposition& d) {
  size_t w = 0;
  for (size_t i = 0; i < d.node_bags.size(); ++i)
    w = std::max(w, set_union(d.node_bags[i], d.guard_bags[i]).size());
  return static_cast<int>(w);
}

int width(const ArborealDecomposition& d) {
  if (d.node_bags.empty()) return 0;
  std::vector<VertexSet> incident(d.skeleton.node_count);
  for (size_t e = 0; e < d.skeleton.arcs.size(); ++e) {
    auto [i, j] = d.skeleton.arcs[e];
    incident[i] = set_union(incident[i], d.arc_bags[e]);
    incident[j] = set_union(incident[j], d.arc_bags[e]);
  }
  size_t w = 0;
  for (int i = 0; i < d.skeleton.node_count; ++i)
    w = std::max(w, set_union(d.node_bags[i], incident[i]).size());
  return static_cast<int>(w) - 1;
}

DirectedPathDecomposition normalize_dpd(const DirectedPathDecomposition& d) {
  std::vector<VertexSet> bags = d.bags;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < bags.size(); ++i) {
      if (set_subset(bags[i + 1], bags[i])) {
        bags.erase(bags.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
      if (set_subset(bags[i], bags[i + 1])) {
        bags.erase(bags.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return {std::move(bags)};
}

KellyDecomposition dpd_to_kelly_path(const DirectedPathDecomposition& d) {
  for (size_t i = 0; i + 1 < d.bags.size(); ++i)
    if (set_subset(d.bags[i + 1], d.bags[i]) || set_subset(d.bags[i], d.bags[i + 1]))
      throw InvalidInputError("dpd_to_kelly_path: input must be normalized first");
  KellyDecomposition k;
  int l = static_cast<int>(d.bags.size());
  k.skeleton = Skeleton::path(l);
  k.node_bags.resize(l);
  k.guard_bags.resize(l);
  for (int i = 0; i < l; ++i) {
    if (i == 0) {
      k.node_bags[i] = d.bags[i];
      k.guard_bags[i] = {};
    } else {
      k.node_bags[i] = set_diff(d.bags[i], d.bags[i - 1]);
      k.guard_bags[i] = set_intersect(d.bags[i], d.bags[i - 1]);
    }
  }
  return k;
}

DirectedPathDecomposition kelly_path_to_dpd(const KellyDecomposition& d) {
  if (!d.is_path()) throw InvalidInputError("kelly_path_to_dpd: skeleton is not a path");
  DirectedPathDecomposition out;
  out.bags.resize(d.node_bags.size());
  for (size_t i = 0; i < d.node_bags.size(); ++i)
    out.bags[i] = set_union(d.node_bags[i], d.guard_bags[i]);
  return out;
}

DagDecomposition trivial_dag_decomposition(const Digraph& g) {
  DagDecomposition d;
  d.skeleton.kind = SkeletonKind::Dag;
  d.skeleton.node_count = 1;
  d.node_bags = {g.vertices()};
  return d;
}

DirectedPathDecomposition trivial_dpd(const Digraph& g) { return {{g.vertices()}}; }

KellyDecomposition trivial_kelly(const Digraph& g) {
  KellyDecomposition d;
  d.skeleton = Skeleton::path(1);
  d.node_bags = {g.vertices()};
  d.guard_bags = {{}};
  return d;
}

ArborealDecomposition trivial_arboreal(const Digraph& g, const VertexSet& universe) {
  for (int v : universe)
    if (!g.has_vertex(v)) throw InvalidInputError("trivial_arboreal: universe not in V(G)");
  ArborealDecomposition d;
  d.skeleton.kind = SkeletonKind::Arborescence;
  d.skeleton.node_count = 1;
  d.node_bags = {universe};
  d.universe = universe;
  return d;
}

}  // namespace dwl
