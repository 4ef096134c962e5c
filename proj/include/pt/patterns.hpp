#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pt/graph.hpp"

namespace pt {

// Multiset of requested vertex-disjoint cycle lengths, e.g. {3,4}.
struct CyclePattern {
    std::vector<int> lengths;  // kept sorted ascending

    explicit CyclePattern(std::vector<int> ls);
    int order() const;
};

// One cycle (vertex sequence) per requested length, pairwise vertex-disjoint.
struct PatternWitness {
    std::vector<std::vector<int>> cycles;
};

// Exact search: shortest length first, then recurse on the residual graph.
std::optional<PatternWitness> find_disjoint_cycles(const Graph& g,
                                                   const CyclePattern& p);

bool is_pattern_free(const Graph& g, const CyclePattern& p);

bool validate_witness(const Graph& g, const CyclePattern& p,
                      const PatternWitness& w);

// All cycles of length exactly k, duplicate-free: each cycle reported once,
// starting at its minimum vertex with the smaller second endpoint.
std::vector<std::vector<int>> cycles_of_length(const Graph& g, int k);

struct CircumferenceResult {
    int circumference = 0;  // 0 for forests
    bool exact = true;      // false when the node budget ran out
    std::uint64_t nodes = 0;
};

// Branch-and-bound over simple paths with reachability pruning; exact
// unless the node budget is exhausted (then `exact` is false and the value
// is the best cycle found so far).
CircumferenceResult longest_cycle(const Graph& g,
                                  std::uint64_t node_budget = 50'000'000ULL);

// True iff no vertex cut of size < k exists (brute force over cuts).
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace pt
