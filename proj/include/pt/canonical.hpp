#pragma once

#include <string>
#include <vector>

#include "pt/graph.hpp"

namespace pt {

// Byte string identifying the isomorphism class exactly: equal forms iff
// isomorphic graphs. Computed by equitable refinement plus individualization
// with orbit pruning from discovered automorphisms; not a hash.
using CanonicalForm = std::string;

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> labeling;  // old vertex -> canonical position
    Graph canonical_graph;
    std::vector<std::vector<int>> automorphism_generators;  // old -> old
};

CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// graph6 of the canonically relabeled graph; deterministic per class.
std::string canonical_graph6(const Graph& g);

}  // namespace pt
