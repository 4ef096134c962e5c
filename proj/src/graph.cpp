#include "pt/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pt {

int Graph::edge_count() const {
    std::size_t d = 0;
    for (const auto& a : adj) d += a.size();
    return static_cast<int>(d / 2);
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            std::ostringstream os;
            os << "build_graph: bad edge (" << u << "," << v << ") for n=" << n;
            throw std::invalid_argument(os.str());
        }
        if (!seen.insert(make_edge(u, v)).second) continue;
    }
    for (const auto& [u, v] : seen) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : vertices)
        for (int v : g.adj[u])
            if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return {build_graph(static_cast<int>(vertices.size()), es), vertices};
}

Graph remove_edge(const Graph& g, Edge e) {
    Graph h = g;
    auto& a = h.adj[e.first];
    a.erase(std::remove(a.begin(), a.end(), e.second), a.end());
    auto& b = h.adj[e.second];
    b.erase(std::remove(b.begin(), b.end(), e.first), b.end());
    return h;
}

Graph add_edge(const Graph& g, Edge e) {
    Graph h = g;
    if (!g.adjacent(e.first, e.second)) {
        h.adj[e.first].insert(
            std::lower_bound(h.adj[e.first].begin(), h.adj[e.first].end(), e.second),
            e.second);
        h.adj[e.second].insert(
            std::lower_bound(h.adj[e.second].begin(), h.adj[e.second].end(), e.first),
            e.first);
    }
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.n << " e=" << g.edge_count() << " {";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << ",";
        os << u << "-" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace pt
