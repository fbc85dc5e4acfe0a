#include "dwl/families.hpp"

#include <cmath>
#include <random>

namespace dwl {

namespace {

int int_param(const std::vector<double>& params, size_t i, const char* what) {
  if (i >= params.size()) throw InvalidInputError(std::string(what) + ": missing parameter");
  double v = params[i];
  if (v != std::floor(v) || v < 0 || v > 1e9)
    throw InvalidInputError(std::string(what) + ": expected a non-negative integer parameter");
  return static_cast<int>(v);
}

double prob_param(const std::vector<double>& params, size_t i, const char* what) {
  if (i >= params.size()) throw InvalidInputError(std::string(what) + ": missing probability");
  double p = params[i];
  if (p < 0.0 || p > 1.0)
    throw InvalidInputError(std::string(what) + ": probability outside [0,1]");
  return p;
}

// 53-bit uniform in [0,1); identical across platforms for a fixed seed.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Digraph bidirected_from_edges(int n, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace

Digraph gen_family(const std::string& name, const std::vector<double>& params,
                   unsigned long long seed) {
  if (name == "biorient-clique") {
    int k = int_param(params, 0, "biorient-clique");
    if (k < 1) throw InvalidInputError("biorient-clique: need k >= 1");
    std::vector<Arc> edges;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return bidirected_from_edges(k, edges);
  }
  if (name == "biorient-path") {
    int k = int_param(params, 0, "biorient-path");
    if (k < 1) throw InvalidInputError("biorient-path: need k >= 1");
    std::vector<Arc> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return bidirected_from_edges(k, edges);
  }
  if (name == "biorient-ternary-tree") {
    int h = int_param(params, 0, "biorient-ternary-tree");
    if (h > 9) throw InvalidInputError("biorient-ternary-tree: height above 9");
    long long n = 1;
    long long level = 1;
    for (int d = 1; d <= h; ++d) {
      level *= 3;
      n += level;
    }
    std::vector<Arc> edges;
    for (long long v = 0; v < n; ++v)
      for (long long c = 3 * v + 1; c <= 3 * v + 3; ++c)
        if (c < n) edges.emplace_back(static_cast<int>(v), static_cast<int>(c));
    return bidirected_from_edges(static_cast<int>(n), edges);
  }
  if (name == "directed-cycle") {
    int n = int_param(params, 0, "directed-cycle");
    if (n < 2) throw InvalidInputError("directed-cycle: need n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
  }
  if (name == "random-dag") {
    int n = int_param(params, 0, "random-dag");
    double p = prob_param(params, 1, "random-dag");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (next_unit(rng) < p) arcs.emplace_back(i, j);
    return Digraph(n, std::move(arcs));
  }
  if (name == "random-digraph") {
    int n = int_param(params, 0, "random-digraph");
    double p = prob_param(params, 1, "random-digraph");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && next_unit(rng) < p) arcs.emplace_back(i, j);
    return Digraph(n, std::move(arcs));
  }
  throw InvalidInputError("unknown family: " + name);
}

std::vector<std::string> family_names() {
  return {"biorient-clique", "biorient-path",  "biorient-ternary-tree",
          "directed-cycle",  "random-dag",     "random-digraph"};
}

}  // namespace dwl
