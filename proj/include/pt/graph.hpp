#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pt {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on dense vertex indices 0..n-1.
// Adjacency lists are kept sorted; no loops, no parallel edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;  // sorted lexicographically

    bool operator==(const Graph&) const = default;
};

// Builds a graph from an edge list, collapsing duplicates.
// Throws std::invalid_argument on a loop or an out-of-range endpoint,
// naming the offending pair.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Subgraph induced on `vertices` (need not be sorted); vertices are
// renumbered by their position. Returns the graph and the old-id map.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices);

Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

std::vector<std::vector<int>> connected_components(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace pt
