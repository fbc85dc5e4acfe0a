#include "dwl/separator.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace dwl {

std::string separator_mode_name(SeparatorMode m) {
  switch (m) {
    case SeparatorMode::Exact: return "exact";
    case SeparatorMode::Heuristic: return "heuristic";
    case SeparatorMode::Trivial: return "trivial";
  }
  return "?";
}

bool validate_separator(const Digraph& g, const VertexSet& u, const Rational& alpha,
                        const SeparatorResult& r) {
  for (int v : u)
    if (!g.has_vertex(v)) throw InvalidInputError("validate_separator: U not within V(G)");
  if (!set_disjoint(r.s, r.u1) || !set_disjoint(r.s, r.u2) || !set_disjoint(r.u1, r.u2))
    return false;
  if (set_union(set_union(r.s, r.u1), r.u2) != g.vertices()) return false;
  if (u.size() > 1) {
    long long total = static_cast<long long>(u.size());
    if (!within_fraction(static_cast<long long>(set_intersect(r.u1, u).size()), alpha, total))
      return false;
    if (!within_fraction(static_cast<long long>(set_intersect(r.u2, u).size()), alpha, total))
      return false;
  }
  return is_guarding(g, r.u2, r.s);
}

namespace {

struct CondensedView {
  std::vector<VertexSet> comps;
  std::vector<int> u_count;          // balance-set vertices per component
  std::vector<unsigned> succ_mask;   // component adjacency, indices < 32
};

CondensedView condense_without(const Digraph& g, const VertexSet& s, const VertexSet& u) {
  CondensedView view;
  Digraph rest = g.induced(set_diff(g.vertices(), s));
  view.comps = scc_condensation(rest).components;
  int q = static_cast<int>(view.comps.size());
  view.u_count.resize(q);
  view.succ_mask.assign(q, 0);
  std::vector<std::pair<int, int>> where;  // vertex -> component
  for (int c = 0; c < q; ++c) {
    view.u_count[c] = static_cast<int>(set_intersect(view.comps[c], u).size());
    for (int v : view.comps[c]) where.emplace_back(v, c);
  }
  std::sort(where.begin(), where.end());
  auto comp_of = [&](int v) {
    auto it = std::lower_bound(where.begin(), where.end(), std::make_pair(v, 0));
    return it->second;
  };
  for (const auto& [a, b] : rest.arcs()) {
    int ca = comp_of(a), cb = comp_of(b);
    if (ca != cb) view.succ_mask[ca] |= 1u << cb;
  }
  return view;
}

// Lexicographically smallest U2 among out-closed component unions meeting
// both balance bounds, or nullopt.
std::optional<VertexSet> best_u2(const CondensedView& view, const Rational& alpha,
                                 long long u_total, long long u_outside_s) {
  int q = static_cast<int>(view.comps.size());
  if (q > 30) throw CapabilityError("separator search: too many components");
  bool vacuous = u_total <= 1;
  std::optional<VertexSet> best;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    bool closed = true;
    long long u2_count = 0;
    for (int c = 0; c < q && closed; ++c) {
      if (!(mask >> c & 1u)) continue;
      if (view.succ_mask[c] & ~mask) closed = false;
      u2_count += view.u_count[c];
    }
    if (!closed) continue;
    if (!vacuous) {
      if (!within_fraction(u2_count, alpha, u_total)) continue;
      if (!within_fraction(u_outside_s - u2_count, alpha, u_total)) continue;
    }
    VertexSet u2;
    for (int c = 0; c < q; ++c)
      if (mask >> c & 1u) u2 = set_union(u2, view.comps[c]);
    if (!best || set_lex_less(u2, *best)) best = std::move(u2);
  }
  return best;
}

SeparatorResult fallback_result(const Digraph& g, const VertexSet& u) {
  return {u, set_diff(g.vertices(), u), {}};
}

}  // namespace

SeparatorResult find_sep_exact(const Digraph& g, const VertexSet& u, const Rational& alpha,
                               int size_cap) {
  for (int v : u)
    if (!g.has_vertex(v)) throw InvalidInputError("find_sep_exact: U not within V(G)");
  int n = g.vertex_count();
  if (n > size_cap)
    throw CapabilityError("find_sep_exact: |V|=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(size_cap));
  if (u.size() <= 1) return {{}, g.vertices(), {}};

  const VertexSet& verts = g.vertices();
  long long u_total = static_cast<long long>(u.size());
  // Size-k subsets in lexicographic order via index combinations.
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet s;
      for (int i : idx) s.push_back(verts[i]);
      CondensedView view = condense_without(g, s, u);
      long long outside = u_total - static_cast<long long>(set_intersect(s, u).size());
      if (auto u2 = best_u2(view, alpha, u_total, outside)) {
        VertexSet u1 = set_diff(set_diff(g.vertices(), s), *u2);
        return {std::move(s), std::move(u1), std::move(*u2)};
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // S = V(G) is always valid, so we never get here.
  return fallback_result(g, g.vertices());
}

namespace {

// Minimum s-t vertex cut by unit-capacity max-flow on the split graph.
// Returns nullopt when an arc (s,t) makes the cut infinite.
std::optional<VertexSet> min_vertex_cut(const Digraph& g, int s, int t) {
  if (g.has_arc(s, t)) return std::nullopt;
  const VertexSet& verts = g.vertices();
  int n = static_cast<int>(verts.size());
  auto local = [&](int id) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), id) - verts.begin());
  };
  // Node 2i = v_in, 2i+1 = v_out.
  int big = 4 * n + 8;
  struct Edge {
    int to, cap, rev;
  };
  std::vector<std::vector<Edge>> adj(2 * n);
  auto add_edge = [&](int a, int b, int cap) {
    adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0, static_cast<int>(adj[a].size()) - 1});
  };
  for (int i = 0; i < n; ++i) {
    int cap = (verts[i] == s || verts[i] == t) ? big : 1;
    add_edge(2 * i, 2 * i + 1, cap);
  }
  for (const auto& [a, b] : g.arcs()) add_edge(2 * local(a) + 1, 2 * local(b), big);

  int source = 2 * local(s) + 1, sink = 2 * local(t);
  int flow = 0;
  while (flow <= n) {
    // BFS augmenting path.
    std::vector<std::pair<int, int>> prev(2 * n, {-1, -1});
    std::queue<int> bfs;
    bfs.push(source);
    prev[source] = {source, -1};
    while (!bfs.empty() && prev[sink].first == -1) {
      int v = bfs.front();
      bfs.pop();
      for (size_t e = 0; e < adj[v].size(); ++e) {
        const Edge& edge = adj[v][e];
        if (edge.cap > 0 && prev[edge.to].first == -1) {
          prev[edge.to] = {v, static_cast<int>(e)};
          bfs.push(edge.to);
        }
      }
    }
    if (prev[sink].first == -1) break;
    for (int v = sink; v != source;) {
      auto [pv, pe] = prev[v];
      adj[pv][pe].cap -= 1;
      adj[adj[pv][pe].to][adj[pv][pe].rev].cap += 1;
      v = pv;
    }
    ++flow;
  }
  // Cut vertices: split edges saturated across the residual reachability.
  std::vector<bool> reach(2 * n, false);
  std::vector<int> stack{source};
  reach[source] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : adj[v])
      if (e.cap > 0 && !reach[e.to]) {
        reach[e.to] = true;
        stack.push_back(e.to);
      }
  }
  VertexSet cut;
  for (int i = 0; i < n; ++i)
    if (reach[2 * i] && !reach[2 * i + 1]) cut.push_back(verts[i]);
  return cut;
}

// Scan suffixes of the topological component order as U2 candidates; take the
// first split meeting both bounds.
std::optional<SeparatorResult> split_for(const Digraph& g, const VertexSet& s, const VertexSet& u,
                                         const Rational& alpha) {
  Digraph rest = g.induced(set_diff(g.vertices(), s));
  auto comps = scc_condensation(rest).components;
  int q = static_cast<int>(comps.size());
  long long u_total = static_cast<long long>(u.size());
  bool vacuous = u_total <= 1;
  long long outside = static_cast<long long>(set_intersect(rest.vertices(), u).size());
  // k = first component of the suffix; k = q is the empty suffix.
  std::vector<long long> suffix_counts(q + 1, 0);
  for (int k = q - 1; k >= 0; --k)
    suffix_counts[k] =
        suffix_counts[k + 1] + static_cast<long long>(set_intersect(comps[k], u).size());
  for (int k = q; k >= 0; --k) {
    long long u2_count = suffix_counts[k];
    long long u1_count = outside - u2_count;
    if (!vacuous && (!within_fraction(u2_count, alpha, u_total) ||
                     !within_fraction(u1_count, alpha, u_total)))
      continue;
    VertexSet u2;
    for (int c = k; c < q; ++c) u2 = set_union(u2, comps[c]);
    VertexSet u1 = set_diff(rest.vertices(), u2);
    return SeparatorResult{s, std::move(u1), std::move(u2)};
  }
  return std::nullopt;
}

}  // namespace

SeparatorResult find_sep_heuristic(const Digraph& g, const VertexSet& u, const Rational& alpha,
                                   unsigned long long seed) {
  for (int v : u)
    if (!g.has_vertex(v)) throw InvalidInputError("find_sep_heuristic: U not within V(G)");
  if (u.size() <= 1) return {{}, g.vertices(), {}};

  std::optional<SeparatorResult> best = split_for(g, {}, u, alpha);

  int n = g.vertex_count();
  if (n >= 2) {
    std::mt19937_64 rng(seed);
    const VertexSet& verts = g.vertices();
    int samples = std::min(32, n * (n - 1));
    for (int it = 0; it < samples; ++it) {
      int a = verts[static_cast<size_t>(rng() % verts.size())];
      int b = verts[static_cast<size_t>(rng() % verts.size())];
      if (a == b) continue;
      auto cut = min_vertex_cut(g, a, b);
      if (!cut) continue;
      if (best && cut->size() >= best->s.size()) continue;
      if (auto r = split_for(g, *cut, u, alpha))
        if (!best || r->s.size() < best->s.size()) best = std::move(r);
    }
  }

  SeparatorResult fallback = {u, set_diff(g.vertices(), u), {}};
  if (!best || fallback.s.size() < best->s.size()) return fallback;
  return *best;
}

SeparatorResult find_sep(const Digraph& g, const VertexSet& u, const Rational& alpha,
                         const SeparatorStrategy& strategy) {
  switch (strategy.mode) {
    case SeparatorMode::Exact: return find_sep_exact(g, u, alpha, strategy.size_cap);
    case SeparatorMode::Heuristic: return find_sep_heuristic(g, u, alpha, strategy.rng_seed);
    case SeparatorMode::Trivial:
      if (u.size() <= 1) return {{}, g.vertices(), {}};
      return {u, set_diff(g.vertices(), u), {}};
  }
  throw InvalidInputError("unknown separator mode");
}

int dsn(const Digraph& g, const Rational& alpha, int n_cap) {
  int n = g.vertex_count();
  if (n > n_cap)
    throw CapabilityError("dsn: |V|=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(n_cap));
  const VertexSet& verts = g.vertices();
  int best = 0;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    VertexSet u;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1ull) u.push_back(verts[i]);
    SeparatorResult r = find_sep_exact(g, u, alpha, std::max(n, 16));
    best = std::max(best, static_cast<int>(r.s.size()));
  }
  return best;
}

SeparatorResult separator_from_arboreal(const Digraph& g, const ArborealDecomposition& d,
                                        const VertexSet& u) {
  ValidationReport rep = validate_arboreal(g, d);
  if (!rep.ok() || d.universe != g.vertices())
    throw InvalidInputError("separator_from_arboreal: not a valid arboreal decomposition of G");
  if (g.vertex_count() == 0) return {{}, {}, {}};

  auto desc = d.skeleton.descendants();
  int t = d.skeleton.node_count;
  std::vector<long long> subtree_u(t, 0);
  for (int i = 0; i < t; ++i) {
    VertexSet uni;
    for (int j : desc[i]) uni = set_union(uni, d.node_bags[j]);
    subtree_u[i] = static_cast<long long>(set_intersect(uni, u).size());
  }
  std::vector<int> depth(t, 0);
  for (int r : d.skeleton.roots()) depth[r] = 0;
  {
    // arborescence: arcs give parent -> child; BFS from the root
    auto ch = d.skeleton.children();
    auto roots = d.skeleton.roots();
    std::vector<int> stack = roots;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : ch[v]) {
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      }
    }
  }

  // Deepest node whose subtree holds at least half of U; ties by smallest id.
  // The root always qualifies, so q is well defined.
  long long u_total = static_cast<long long>(u.size());
  int q = d.skeleton.roots().front();
  for (int i = 0; i < t; ++i) {
    if (2 * subtree_u[i] < u_total) continue;
    if (depth[i] > depth[q] || (depth[i] == depth[q] && i < q)) q = i;
  }

  VertexSet s = d.node_bags[q];
  for (size_t e = 0; e < d.skeleton.arcs.size(); ++e) {
    auto [a, b] = d.skeleton.arcs[e];
    if (a == q || b == q) s = set_union(s, d.arc_bags[e]);
  }

  auto comps = scc_condensation(g.induced(set_diff(g.vertices(), s))).components;
  int k = static_cast<int>(comps.size());
  std::vector<long long> cnt(k);
  long long outside = 0;
  for (int i = 0; i < k; ++i) {
    cnt[i] = static_cast<long long>(set_intersect(comps[i], u).size());
    outside += cnt[i];
  }
  auto union_range = [&](int lo, int hi) {  // [lo, hi)
    VertexSet out;
    for (int i = lo; i < hi; ++i) out = set_union(out, comps[i]);
    return out;
  };

  // Case 1: everything outside S already fits the 3/4 bound.
  if (4 * outside <= 3 * u_total)
    return {std::move(s), union_range(0, k), {}};

  // Case 2: some component holds at least a quarter of U. With
  // |C_i ∩ U| = (1/4 + θ)|U|, the prefix A joins C_i exactly when
  // |A ∩ U| ≤ (3/8 − θ/2)|U|, i.e. 2|A ∩ U| + |C_i ∩ U| ≤ |U|.
  for (int i = 0; i < k; ++i) {
    if (4 * cnt[i] < u_total) continue;
    long long prefix = 0;
    for (int j = 0; j < i; ++j) prefix += cnt[j];
    if (2 * prefix + cnt[i] <= u_total)
      return {std::move(s), union_range(0, i + 1), union_range(i + 1, k)};
    return {std::move(s), union_range(0, i), union_range(i, k)};
  }

  // Case 3: all components small; cut at the first prefix reaching |U|/4.
  long long acc = 0;
  for (int j = 0; j < k; ++j) {
    acc += cnt[j];
    if (4 * acc >= u_total)
      return {std::move(s), union_range(0, j + 1), union_range(j + 1, k)};
  }
  return {std::move(s), union_range(0, k), {}};
}

}  // namespace dwl
