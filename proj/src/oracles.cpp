#include "dwl/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dwl {

OracleCaps parse_oracle_caps(const std::string& text) {
  OracleCaps caps;
  if (text.empty()) return caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInputError("caps: expected key=value, got " + item);
    std::string key = item.substr(0, eq);
    int value;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw InvalidInputError("caps: bad value in " + item);
    }
    if (key == "dtw")
      caps.dtw = value;
    else if (key == "games")
      caps.games = value;
    else if (key == "orderings") {
      caps.orderings = value;
      caps.elimination = value;
    } else if (key == "elimination")
      caps.elimination = value;
    else
      throw InvalidInputError("caps: unknown key " + key);
  }
  return caps;
}

namespace {

// Dense local view with adjacency bitmasks; oracles work on <= 64 vertices.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> out, in;
  VertexSet ids;

  explicit MaskGraph(const Digraph& g) {
    ids = g.vertices();
    n = static_cast<int>(ids.size());
    if (n > 62) throw CapabilityError("oracle: more than 62 vertices");
    out.assign(n, 0);
    in.assign(n, 0);
    auto local = [&](int id) {
      return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (const auto& [u, v] : g.arcs()) {
      out[local(u)] |= 1ull << local(v);
      in[local(v)] |= 1ull << local(u);
    }
  }

  std::uint64_t full() const { return n == 64 ? ~0ull : (1ull << n) - 1; }

  std::uint64_t reach(std::uint64_t sources, std::uint64_t blocked) const {
    std::uint64_t seen = sources & ~blocked;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= out[v];
      }
      next &= ~blocked & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

void check_cap(const Digraph& g, int n_cap, const char* what) {
  if (g.vertex_count() > n_cap)
    throw CapabilityError(std::string(what) + ": |V|=" + std::to_string(g.vertex_count()) +
                          " exceeds cap " + std::to_string(n_cap));
}

std::uint64_t state_key(std::uint32_t x, std::uint32_t r) {
  return (static_cast<std::uint64_t>(x) << 32) | r;
}

// Submasks of `mask` with popcount <= k, ascending.
std::vector<std::uint32_t> bounded_submasks(std::uint32_t mask, int k) {
  std::vector<std::uint32_t> out;
  std::uint32_t sub = 0;
  while (true) {
    if (std::popcount(sub) <= k) out.push_back(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Visible dynamic robber, k cops: least-fixpoint over the reachable states.
bool visible_game_cops_win(const MaskGraph& mg, int k) {
  struct Move {
    bool capture = false;
    std::vector<int> successors;  // robber's options; cops need all winning
  };
  struct State {
    std::uint32_t cops, territory;
    std::vector<Move> moves;
  };
  std::vector<State> states;
  std::unordered_map<std::uint64_t, int> index;

  auto intern = [&](std::uint32_t x, std::uint32_t r) {
    auto [it, fresh] = index.try_emplace(state_key(x, r), static_cast<int>(states.size()));
    if (fresh) states.push_back({x, r, {}});
    return std::make_pair(it->second, fresh);
  };

  std::vector<int> todo;
  std::vector<int> initial;
  for (int v = 0; v < mg.n; ++v) {
    std::uint32_t r = static_cast<std::uint32_t>(mg.reach(1ull << v, 0));
    auto [id, fresh] = intern(0, r);
    initial.push_back(id);
    if (fresh) todo.push_back(id);
  }

  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    std::uint32_t x = states[id].cops, r = states[id].territory;
    std::vector<Move> moves;
    for (std::uint32_t xp : bounded_submasks(x | r, k)) {
      std::uint32_t blockers = x & xp;
      std::uint32_t escape = static_cast<std::uint32_t>(mg.reach(r, blockers));
      if (escape & ~r) continue;  // territory would grow
      Move move;
      std::uint32_t free = escape & ~xp;
      if (free == 0) {
        move.capture = true;
      } else {
        std::uint32_t f = free;
        std::vector<int> succ;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          std::uint32_t r2 = static_cast<std::uint32_t>(mg.reach(1ull << v, xp));
          auto [sid, fresh] = intern(xp, r2);
          succ.push_back(sid);
          if (fresh) todo.push_back(sid);
        }
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        move.successors = std::move(succ);
      }
      moves.push_back(std::move(move));
    }
    states[id].moves = std::move(moves);
  }

  std::vector<char> win(states.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < states.size(); ++i) {
      if (win[i]) continue;
      for (const Move& m : states[i].moves) {
        bool good = m.capture;
        if (!good && !m.successors.empty()) {
          good = true;
          for (int s : m.successors)
            if (!win[s]) {
              good = false;
              break;
            }
        }
        if (good) {
          win[i] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  for (int id : initial)
    if (!win[id]) return false;
  return true;
}

// Invisible inert robber, k cops: single-player search for a clearing line.
// Cops may land anywhere (only robber-monotonicity constrains the play): a
// cop parked on an already-clean vertex can be the blocker that lets a later
// landing stay monotone, so announcements range over all of V.
bool inert_game_cops_win(const MaskGraph& mg, int k) {
  std::uint32_t full = static_cast<std::uint32_t>(mg.full());
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{0, full}};
  seen.insert(state_key(0, full));
  const std::vector<std::uint32_t> announcements = bounded_submasks(full, k);
  while (!stack.empty()) {
    auto [x, r] = stack.back();
    stack.pop_back();
    for (std::uint32_t xp : announcements) {
      std::uint32_t landing = r & xp;
      std::uint32_t blockers = x & xp;
      std::uint32_t spread =
          landing ? static_cast<std::uint32_t>(mg.reach(landing, blockers)) : 0;
      std::uint32_t r2 = (r & ~xp) | (spread & ~xp);
      if (r2 & ~r) continue;  // contamination would grow
      if (r2 == 0) return true;
      if (seen.insert(state_key(xp, r2)).second) stack.emplace_back(xp, r2);
    }
  }
  return false;
}

}  // namespace

int dagwidth_by_game(const Digraph& g, int n_cap) {
  check_cap(g, n_cap, "dagwidth_by_game");
  if (g.vertex_count() == 0) return 0;
  if (g.vertex_count() > 30) throw CapabilityError("dagwidth_by_game: more than 30 vertices");
  MaskGraph mg(g);
  for (int k = 1; k < mg.n; ++k)
    if (visible_game_cops_win(mg, k)) return k;
  return mg.n;  // n cops trivially win by landing everywhere
}

int kellywidth_by_game(const Digraph& g, int n_cap) {
  check_cap(g, n_cap, "kellywidth_by_game");
  if (g.vertex_count() == 0) return 0;
  if (g.vertex_count() > 30) throw CapabilityError("kellywidth_by_game: more than 30 vertices");
  MaskGraph mg(g);
  for (int k = 1; k < mg.n; ++k)
    if (inert_game_cops_win(mg, k)) return k;
  return mg.n;
}

namespace {

// Out-support of v after the prefix P has been eliminated: vertices outside
// P ∪ {v} reachable from v through P-internal paths (the fill arcs).
int elimination_support(const MaskGraph& mg, int v, std::uint64_t p) {
  std::uint64_t direct = mg.out[v];
  std::uint64_t inside = direct & p;
  std::uint64_t seen = inside;
  while (inside) {
    std::uint64_t next = 0;
    std::uint64_t f = inside;
    while (f) {
      int w = std::countr_zero(f);
      f &= f - 1;
      next |= mg.out[w];
    }
    direct |= next;
    next &= p & ~seen;
    seen |= next;
    inside = next;
  }
  return std::popcount(direct & ~p & ~(1ull << v));
}

}  // namespace

EliminationOrdering elimination_support_width(const Digraph& g, const std::vector<int>& order) {
  VertexSet check = make_set(order);
  if (check != g.vertices() || order.size() != check.size())
    throw InvalidInputError("elimination ordering must be a permutation of V(G)");
  MaskGraph mg(g);
  auto local = [&](int id) {
    return static_cast<int>(std::lower_bound(mg.ids.begin(), mg.ids.end(), id) - mg.ids.begin());
  };
  EliminationOrdering result;
  result.order = order;
  std::uint64_t p = 0;
  for (int id : order) {
    int v = local(id);
    int s = elimination_support(mg, v, p);
    result.supports.push_back(s);
    result.width = std::max(result.width, s);
    p |= 1ull << v;
  }
  return result;
}

EliminationOrdering greedy_elimination_ordering(const Digraph& g) {
  MaskGraph mg(g);
  EliminationOrdering result;
  std::uint64_t p = 0;
  for (int step = 0; step < mg.n; ++step) {
    int best = -1, best_support = 0;
    for (int v = 0; v < mg.n; ++v) {
      if (p >> v & 1ull) continue;
      int s = elimination_support(mg, v, p);
      if (best < 0 || s < best_support) {
        best = v;
        best_support = s;
      }
    }
    result.order.push_back(mg.ids[best]);
    result.supports.push_back(best_support);
    result.width = std::max(result.width, best_support);
    p |= 1ull << best;
  }
  return result;
}

KellyEliminationResult kellywidth_by_elimination(const Digraph& g, int n_cap) {
  check_cap(g, n_cap, "kellywidth_by_elimination");
  int n = g.vertex_count();
  if (n == 0) return {0, {}};
  if (n > 22) throw CapabilityError("kellywidth_by_elimination: more than 22 vertices");
  MaskGraph mg(g);
  std::uint64_t full = mg.full();
  // best[P] = min over orderings of V \ P of the max support, eliminating
  // after prefix-set P.
  std::vector<int> best(1ull << n, 0);
  for (long long p = static_cast<long long>(full) - 1; p >= 0; --p) {
    int value = -1;
    for (int v = 0; v < n; ++v) {
      if (p >> v & 1ll) continue;
      int cost = std::max(elimination_support(mg, v, static_cast<std::uint64_t>(p)),
                          best[static_cast<std::uint64_t>(p) | (1ull << v)]);
      if (value < 0 || cost < value) value = cost;
    }
    best[static_cast<std::uint64_t>(p)] = value;
  }

  KellyEliminationResult result;
  result.width = best[0] + 1;
  std::uint64_t p = 0;
  while (p != full) {
    for (int v = 0; v < n; ++v) {
      if (p >> v & 1ull) continue;
      int s = elimination_support(mg, v, p);
      if (std::max(s, best[p | (1ull << v)]) == best[p]) {
        result.ordering.order.push_back(mg.ids[v]);
        result.ordering.supports.push_back(s);
        result.ordering.width = std::max(result.ordering.width, s);
        p |= 1ull << v;
        break;
      }
    }
  }
  return result;
}

namespace {

struct DpwSearch {
  const MaskGraph& mg;
  int bound;
  std::size_t budget;
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;  // local indices, built on success

  explicit DpwSearch(const MaskGraph& m, int w, std::size_t budget_)
      : mg(m), bound(w), budget(budget_) {}

  int boundary_size(std::uint64_t p) const {
    int count = 0;
    std::uint64_t f = p;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if (mg.in[v] & ~p) ++count;
    }
    return count;
  }

  bool extend(std::uint64_t p) {
    if (p == mg.full()) return true;
    if (1 + boundary_size(p) > bound) return false;
    if (dead.contains(p)) return false;
    if (dead.size() > budget)
      throw CapabilityError("dpw search exceeded its state budget");
    for (int v = 0; v < mg.n; ++v) {
      if (p >> v & 1ull) continue;
      if (extend(p | (1ull << v))) {
        order.push_back(v);
        return true;
      }
    }
    dead.insert(p);
    return false;
  }
};

std::vector<VertexSet> layout_bags(const MaskGraph& mg, const std::vector<int>& order_local) {
  std::vector<VertexSet> bags;
  std::uint64_t p = 0;
  for (int v : order_local) {
    VertexSet bag{mg.ids[v]};
    std::uint64_t f = p;
    while (f) {
      int w = std::countr_zero(f);
      f &= f - 1;
      if (mg.in[w] & ~p) bag.push_back(mg.ids[w]);
    }
    bags.push_back(make_set(std::move(bag)));
    p |= 1ull << v;
  }
  return bags;
}

}  // namespace

bool dpw_at_most(const Digraph& g, int w, std::size_t state_budget) {
  if (g.vertex_count() == 0) return true;
  if (w < 1) return false;
  MaskGraph mg(g);
  DpwSearch search(mg, w, state_budget);
  return search.extend(0);
}

DpwResult dpw_by_ordering(const Digraph& g, int n_cap) {
  check_cap(g, n_cap, "dpw_by_ordering");
  if (g.vertex_count() == 0) return {0, {}};
  MaskGraph mg(g);
  for (int w = 1; w <= mg.n; ++w) {
    DpwSearch search(mg, w, std::size_t(-1));
    if (!search.extend(0)) continue;
    std::reverse(search.order.begin(), search.order.end());
    DpwResult result;
    result.width = w;
    result.certificate.bags = layout_bags(mg, search.order);
    return result;
  }
  throw InvalidInputError("dpw_by_ordering: unreachable");
}

// ---------------------------------------------------------------------------
// Exact directed treewidth.
//
// f_w(W, Y) asks whether the vertices W admit an arborescence of bags where
// the incoming arc bag at the root is Y and every node i keeps
// |W_i ∪ X_{~i}| <= w+1. A decomposition is built root-first: choose the root
// bag W_r ⊆ W; split the rest into parts, give each part an arc bag Y_c that
// the part is normal for; recurse. Interposed empty-bag chain nodes (which
// can swap an expensive incoming bag for a cheaper one) are a fixpoint
// closure over Y at fixed W. Parts are strictly smaller than W except through
// that closure, so processing W by popcount terminates.
// ---------------------------------------------------------------------------

namespace {

struct DtwSearch {
  const MaskGraph& mg;
  int bound;  // w+1, the per-node budget
  std::unordered_map<std::uint64_t, char> normal_memo;

  struct NodeWitness {
    std::uint64_t root_bag;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;  // (part, arc bag)
  };
  struct Entry {
    bool feasible = false;
    bool chain = false;              // feasible via an interposed empty node
    std::uint64_t chain_next = 0;    // the cheaper arc bag
    std::optional<NodeWitness> node;
  };
  // Keyed by (W, Y); W processed in popcount order.
  std::unordered_map<std::uint64_t, Entry> table;
  std::unordered_map<std::uint64_t, char> part_ok;  // (part, avail) -> bool

  DtwSearch(const MaskGraph& m, int w) : mg(m), bound(w + 1) {}

  static std::uint64_t key(std::uint64_t w, std::uint64_t y) { return (w << 32) | y; }

  bool normal(std::uint64_t w, std::uint64_t y) {
    if (w & y) return false;
    if (!w) return true;
    auto [it, fresh] = normal_memo.try_emplace(key(w, y), 0);
    if (!fresh) return it->second;
    // Escape points, travel outside W and Y, check for a return arc.
    std::uint64_t escapes = 0;
    std::uint64_t f = w;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      escapes |= mg.out[v];
    }
    escapes &= ~w & ~y;
    std::uint64_t outside = escapes ? mg.reach(escapes, w | y) : 0;
    bool ok = true;
    f = outside;
    while (f && ok) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if (mg.out[v] & w) ok = false;
    }
    it->second = ok ? 1 : 0;
    return ok;
  }

  const Entry* lookup(std::uint64_t w, std::uint64_t y) const {
    auto it = table.find(key(w, y));
    return it == table.end() ? nullptr : &it->second;
  }

  bool part_feasible(std::uint64_t part, std::uint64_t avail) {
    std::uint64_t k = key(part, avail & ~part);
    auto [it, fresh] = part_ok.try_emplace(k, 0);
    if (!fresh) return it->second;
    bool ok = false;
    std::uint64_t options = avail & ~part;
    std::uint64_t yc = 0;
    while (true) {
      if (normal(part, yc)) {
        const Entry* e = lookup(part, yc);
        if (e && e->feasible) {
          ok = true;
          break;
        }
      }
      if (yc == options) break;
      yc = (yc - options) & options;
    }
    it->second = ok ? 1 : 0;
    return ok;
  }

  // Partition `rest` into parts with part_feasible(part, avail); forbid the
  // single part == forbid_whole when nonzero.
  bool cover(std::uint64_t rest, std::uint64_t avail, std::uint64_t forbid_whole,
             std::vector<std::uint64_t>* pieces) {
    if (!rest) return true;
    std::uint64_t low = rest & (~rest + 1);
    // Enumerate submasks of rest containing the lowest bit, largest first so
    // reconstruction tends to find coarse parts quickly.
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      if ((sub & low) && sub != forbid_whole && part_feasible(sub, avail)) {
        if (cover(rest & ~sub, avail, 0, pieces)) {
          if (pieces) pieces->push_back(sub);
          return true;
        }
      }
      if (sub == 0) break;
    }
    return false;
  }

  // Node-step feasibility; fills entry.node on success. Root bag candidates
  // range over all submasks of W.
  bool node_step(std::uint64_t w, std::uint64_t y, Entry& entry) {
    std::uint64_t wr = 0;
    while (true) {
      std::uint64_t base = wr | y;
      if (std::popcount(base) <= bound) {
        std::uint64_t rest = w & ~wr;
        // Arc-bag budget: any superset of base within the node budget.
        std::uint64_t extra_pool = mg.full() & ~base;
        int room = bound - std::popcount(base);
        // Enumerate budget completions of size <= room.
        std::vector<std::uint64_t> completions;
        std::uint64_t sub = 0;
        while (true) {
          if (std::popcount(sub) <= room) completions.push_back(sub);
          if (sub == extra_pool) break;
          sub = (sub - extra_pool) & extra_pool;
        }
        std::sort(completions.begin(), completions.end());
        for (std::uint64_t extra : completions) {
          std::uint64_t avail = base | extra;
          std::uint64_t forbid = (wr == 0) ? w : 0;
          std::vector<std::uint64_t> pieces;
          if (cover(rest, avail, forbid, &pieces)) {
            NodeWitness witness;
            witness.root_bag = wr;
            std::reverse(pieces.begin(), pieces.end());
            for (std::uint64_t piece : pieces) {
              // Recover the arc bag that made the piece feasible.
              std::uint64_t options = avail & ~piece;
              std::uint64_t yc = 0;
              std::uint64_t chosen = ~0ull;
              while (true) {
                if (normal(piece, yc)) {
                  const Entry* e = lookup(piece, yc);
                  if (e && e->feasible) {
                    chosen = yc;
                    break;
                  }
                }
                if (yc == options) break;
                yc = (yc - options) & options;
              }
              witness.parts.emplace_back(piece, chosen);
            }
            entry.feasible = true;
            entry.node = std::move(witness);
            return true;
          }
        }
      }
      if (wr == w) break;
      wr = (wr - w) & w;
    }
    return false;
  }
};

}  // namespace

DtwResult dtw_exact_small(const Digraph& g, int n_cap) {
  check_cap(g, n_cap, "dtw_exact_small");
  int n = g.vertex_count();
  if (n > 10) throw CapabilityError("dtw_exact_small: more than 10 vertices");
  MaskGraph mg(g);
  std::uint64_t full = mg.full();

  for (int w = 0; w <= std::max(0, n - 1); ++w) {
    DtwSearch search(mg, w);

    // All W masks by ascending popcount; Y over submasks of the complement.
    std::vector<std::uint64_t> order;
    for (std::uint64_t m = 0; m <= full; ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });

    for (std::uint64_t wmask : order) {
      std::uint64_t pool = full & ~wmask;
      // Pass 1: node steps.
      std::uint64_t y = 0;
      while (true) {
        DtwSearch::Entry entry;
        search.node_step(wmask, y, entry);
        search.table[DtwSearch::key(wmask, y)] = std::move(entry);
        if (y == pool) break;
        y = (y - pool) & pool;
      }
      // Pass 2: chain closure over Y at fixed W.
      bool changed = true;
      while (changed) {
        changed = false;
        y = 0;
        while (true) {
          auto& entry = search.table[DtwSearch::key(wmask, y)];
          if (!entry.feasible) {
            std::uint64_t yprime = 0;
            while (true) {
              if (yprime != y && std::popcount(y | yprime) <= w + 1 &&
                  search.normal(wmask, yprime)) {
                const auto* e2 = search.lookup(wmask, yprime);
                if (e2 && e2->feasible) {
                  entry.feasible = true;
                  entry.chain = true;
                  entry.chain_next = yprime;
                  changed = true;
                  break;
                }
              }
              if (yprime == pool) break;
              yprime = (yprime - pool) & pool;
            }
          }
          if (y == pool) break;
          y = (y - pool) & pool;
        }
      }
      // part_feasible only ever queries strictly smaller W masks, which are
      // final by this point, so its cache never goes stale.
    }

    const auto* top = search.lookup(full, 0);
    if (!top || !top->feasible) continue;

    // Reconstruct the certificate.
    DtwResult result;
    result.width = w;
    ArborealDecomposition& d = result.certificate;
    d.skeleton.kind = SkeletonKind::Arborescence;
    d.universe = g.vertices();

    auto ids_of = [&](std::uint64_t mask) {
      VertexSet out;
      std::uint64_t f = mask;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        out.push_back(mg.ids[v]);
      }
      return out;
    };

    // Returns the new subtree's root node id.
    auto build = [&](auto&& self, std::uint64_t wmask, std::uint64_t y) -> int {
      const auto* entry = search.lookup(wmask, y);
      if (entry->chain) {
        int root = d.skeleton.node_count++;
        d.node_bags.push_back({});
        int child = self(self, wmask, entry->chain_next);
        d.skeleton.arcs.emplace_back(root, child);
        d.arc_bags.push_back(ids_of(entry->chain_next));
        return root;
      }
      const auto& witness = *entry->node;
      int root = d.skeleton.node_count++;
      d.node_bags.push_back(ids_of(witness.root_bag));
      for (const auto& [piece, yc] : witness.parts) {
        int child = self(self, piece, yc);
        d.skeleton.arcs.emplace_back(root, child);
        d.arc_bags.push_back(ids_of(yc));
      }
      return root;
    };
    build(build, full, 0);

    // Arcs sorted with bags aligned.
    std::vector<size_t> perm(d.skeleton.arcs.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](size_t a, size_t b) { return d.skeleton.arcs[a] < d.skeleton.arcs[b]; });
    std::vector<std::pair<int, int>> arcs;
    std::vector<VertexSet> bags;
    for (size_t i : perm) {
      arcs.push_back(d.skeleton.arcs[i]);
      bags.push_back(d.arc_bags[i]);
    }
    d.skeleton.arcs = std::move(arcs);
    d.arc_bags = std::move(bags);
    return result;
  }
  throw InvalidInputError("dtw_exact_small: unreachable");
}

}  // namespace dwl
