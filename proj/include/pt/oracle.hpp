#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pt/graph.hpp"
#include "pt/patterns.hpp"

namespace pt {

// Slow reference implementations used to cross-validate the fast engines.
// These deliberately take the dumbest correct route: enumerate vertex
// subsets and test spanning cycles by permutation.

// Does some subset of each requested size carry a spanning cycle, all
// pairwise disjoint?
bool naive_contains_disjoint_cycles(const Graph& g, const CyclePattern& p);

// Number of k-cycles, counted via k-subsets and Hamiltonian-cycle
// enumeration of the induced subgraph.
long long naive_count_cycles(const Graph& g, int k);

// Exact circumference for small graphs (subset route as above).
int naive_circumference(const Graph& g);

}  // namespace pt
