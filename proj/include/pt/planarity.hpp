#pragma once

#include <variant>
#include <vector>

#include "pt/embedding.hpp"
#include "pt/graph.hpp"

namespace pt {

struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> paths;  // internally disjoint branch-to-branch paths
    std::vector<Edge> edges;              // the full subdivision edge set
};

using PlanarityResult = std::variant<PlaneEmbedding, KuratowskiWitness>;

// Either a combinatorial embedding (rotation system certified spherical by
// the Euler count) or a verified K5/K33 subdivision of g. Never both wrong:
// each outcome carries its own certificate.
PlanarityResult test_planarity(const Graph& g);

bool is_planar(const Graph& g);

// Structural check of a claimed subdivision witness against g.
bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w);

}  // namespace pt
