#pragma once

#include "dwl/digraph.hpp"

namespace dwl {

/// Named graph families with canonical vertex numbering:
///   biorient-clique(k)        both arcs between every vertex pair
///   biorient-path(k)          bidirected path 0-1-...-k-1
///   biorient-ternary-tree(i)  bidirected complete ternary tree of height i,
///                             level order (children of v: 3v+1, 3v+2, 3v+3)
///   directed-cycle(n)         0 -> 1 -> ... -> n-1 -> 0
///   random-dag(n, p)          arc (i,j) for i<j with probability p
///   random-digraph(n, p)      each ordered pair independently with prob. p
/// Random families are byte-reproducible for a fixed seed.
Digraph gen_family(const std::string& name, const std::vector<double>& params,
                   unsigned long long seed = 0);

std::vector<std::string> family_names();

}  // namespace dwl
