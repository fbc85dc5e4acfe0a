#include "dwl/digraph.hpp"

#include <algorithm>
#include <queue>

namespace dwl {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      long long num = std::stoll(text.substr(0, slash));
      long long den = std::stoll(text.substr(slash + 1));
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text), 1);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len > 15) throw InvalidInputError("rational literal too precise: " + text);
    long long den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  } catch (const std::logic_error&) {
    throw InvalidInputError("cannot parse rational: " + text);
  }
}

Digraph::Digraph(int n) {
  if (n < 0) throw InvalidInputError("negative vertex count");
  vertices_.resize(n);
  for (int i = 0; i < n; ++i) vertices_[i] = i;
  out_.resize(n);
  in_.resize(n);
  local_.resize(n);
  for (int i = 0; i < n; ++i) local_[i] = i;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : Digraph(n) {
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    if (!has_vertex(u) || !has_vertex(v))
      throw InvalidInputError("arc endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
    if (i > 0 && arcs[i] == arcs[i - 1])
      throw InvalidInputError("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ")");
    out_[local_[u]].push_back(v);
    in_[local_[v]].push_back(u);
  }
  arcs_ = std::move(arcs);
}

Digraph Digraph::over_vertices(VertexSet vertices, std::vector<Arc> arcs) {
  for (int v : vertices)
    if (v < 0) throw InvalidInputError("negative vertex id");
  vertices = make_set(std::move(vertices));
  Digraph g;
  g.vertices_ = std::move(vertices);
  int n = g.vertex_count();
  g.out_.resize(n);
  g.in_.resize(n);
  int max_id = n == 0 ? -1 : g.vertices_.back();
  g.local_.assign(max_id + 1, -1);
  for (int i = 0; i < n; ++i) g.local_[g.vertices_[i]] = i;
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw InvalidInputError("arc endpoint not in vertex set: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
    if (i > 0 && arcs[i] == arcs[i - 1])
      throw InvalidInputError("duplicate arc (" + std::to_string(u) + "," + std::to_string(v) +
                              ")");
    g.out_[g.local_[u]].push_back(v);
    g.in_[g.local_[v]].push_back(u);
  }
  g.arcs_ = std::move(arcs);
  return g;
}

bool Digraph::has_vertex(int v) const {
  return v >= 0 && v < static_cast<int>(local_.size()) && local_[v] >= 0;
}

int Digraph::index_of(int v) const {
  if (!has_vertex(v)) throw InvalidInputError("unknown vertex " + std::to_string(v));
  return local_[v];
}

bool Digraph::has_arc(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& ns = out_[local_[u]];
  return std::binary_search(ns.begin(), ns.end(), v);
}

const std::vector<int>& Digraph::out_neighbors(int v) const { return out_[index_of(v)]; }
const std::vector<int>& Digraph::in_neighbors(int v) const { return in_[index_of(v)]; }

Digraph Digraph::induced(const VertexSet& keep) const {
  for (int v : keep)
    if (!has_vertex(v)) throw InvalidInputError("induced: unknown vertex " + std::to_string(v));
  std::vector<Arc> arcs;
  for (const auto& [u, v] : arcs_)
    if (set_contains(keep, u) && set_contains(keep, v)) arcs.emplace_back(u, v);
  return over_vertices(keep, std::move(arcs));
}

bool Digraph::has_dense_ids() const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] != i) return false;
  return true;
}

SccCondensation scc_condensation(const Digraph& g) {
  int n = g.vertex_count();
  const VertexSet& ids = g.vertices();

  // Tarjan over local indices, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps_local;
  int next_index = 0;

  struct Frame {
    int v;
    size_t child;
  };
  auto local_of = [&](int id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& outs = g.out_neighbors(ids[f.v]);
      if (f.child < outs.size()) {
        int w = local_of(outs[f.child++]);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> c;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = static_cast<int>(comps_local.size());
            c.push_back(w);
            if (w == f.v) break;
          }
          comps_local.push_back(std::move(c));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  int k = static_cast<int>(comps_local.size());
  std::vector<VertexSet> comp_sets(k);
  std::vector<int> min_id(k);
  for (int c = 0; c < k; ++c) {
    for (int v : comps_local[c]) comp_sets[c].push_back(ids[v]);
    std::sort(comp_sets[c].begin(), comp_sets[c].end());
    min_id[c] = comp_sets[c].front();
  }

  // Kahn on the condensation; ties by smallest original vertex id.
  std::vector<std::vector<int>> succ(k);
  std::vector<int> indeg(k, 0);
  for (const auto& [u, v] : g.arcs()) {
    int cu = comp[local_of(u)], cv = comp[local_of(v)];
    if (cu != cv) succ[cu].push_back(cv);
  }
  for (int c = 0; c < k; ++c) {
    std::sort(succ[c].begin(), succ[c].end());
    succ[c].erase(std::unique(succ[c].begin(), succ[c].end()), succ[c].end());
    for (int d : succ[c]) indeg[d]++;
  }
  auto cmp = [&](int a, int b) { return min_id[a] > min_id[b]; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < k; ++c)
    if (indeg[c] == 0) ready.push(c);
  SccCondensation result;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    result.components.push_back(comp_sets[c]);
    for (int d : succ[c])
      if (--indeg[d] == 0) ready.push(d);
  }
  return result;
}

VertexSet reachable_set(const Digraph& g, const VertexSet& sources, const VertexSet& blocked) {
  if (!set_disjoint(sources, blocked))
    throw InvalidInputError("reachable_set: sources and blocked must be disjoint");
  for (int v : sources)
    if (!g.has_vertex(v)) throw InvalidInputError("reachable_set: unknown source vertex");
  std::vector<int> queue(sources.begin(), sources.end());
  VertexSet seen = sources;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : g.out_neighbors(v)) {
      if (set_contains(blocked, w) || set_contains(seen, w)) continue;
      seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
      queue.push_back(w);
    }
  }
  return seen;
}

bool is_guarding(const Digraph& g, const VertexSet& w, const VertexSet& x) {
  if (!set_disjoint(w, x)) return false;
  for (int u : w)
    for (int v : g.out_neighbors(u))
      if (!set_contains(w, v) && !set_contains(x, v)) return false;
  return true;
}

bool is_normal(const Digraph& g, const VertexSet& w, const VertexSet& x) {
  if (!set_disjoint(w, x)) return false;
  if (w.empty()) return true;
  // Escape points: vertices outside W and X hit directly from W.
  VertexSet escapes;
  for (int u : w)
    for (int v : g.out_neighbors(u))
      if (!set_contains(w, v) && !set_contains(x, v)) escapes.push_back(v);
  escapes = make_set(std::move(escapes));
  if (escapes.empty()) return true;
  // Travel outside W and X only; returning means an arc back into W.
  VertexSet blocked = set_union(w, x);
  VertexSet outside = reachable_set(g, escapes, blocked);
  for (int v : outside)
    for (int t : g.out_neighbors(v))
      if (set_contains(w, t)) return false;
  return true;
}

Digraph biorient(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (const auto& [u, v] : g.arcs())
    if (!g.has_arc(v, u)) arcs.emplace_back(v, u);
  return Digraph::over_vertices(g.vertices(), std::move(arcs));
}

}  // namespace dwl
