#include "pt/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace pt {

namespace {

// slot of neighbor u in rotation[v]
int slot_of(const PlaneEmbedding& emb, int v, int u) {
    const auto& r = emb.rotation[v];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    throw std::invalid_argument("embedding: dart endpoint missing from rotation");
}

}  // namespace

void validate_embedding(const PlaneEmbedding& emb) {
    const Graph& g = emb.graph;
    if (static_cast<int>(emb.rotation.size()) != g.n)
        throw std::invalid_argument("embedding: rotation size != n");
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> a = emb.rotation[v];
        std::sort(a.begin(), a.end());
        if (a != g.adj[v])
            throw std::invalid_argument("embedding: rotation at vertex " +
                                        std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
    int f = static_cast<int>(faces(emb).size());
    if (emb.outer_face < 0 || (f > 0 && emb.outer_face >= f))
        throw std::invalid_argument("embedding: outer face id out of range");
}

std::vector<Face> faces(const PlaneEmbedding& emb) {
    const Graph& g = emb.graph;
    // dart id: (v, slot) -> position in per-vertex offset table
    std::vector<int> offset(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(emb.rotation[v].size());
    int ndarts = offset[g.n];
    std::vector<char> used(ndarts, 0);
    std::vector<Face> out;

    for (int v = 0; v < g.n; ++v) {
        for (std::size_t s = 0; s < emb.rotation[v].size(); ++s) {
            int dart = offset[v] + static_cast<int>(s);
            if (used[dart]) continue;
            Face f;
            f.id = static_cast<int>(out.size());
            int cv = v, cs = static_cast<int>(s);
            do {
                used[offset[cv] + cs] = 1;
                int cu = emb.rotation[cv][cs];
                f.darts_raw.emplace_back(cv, cu);
                f.vertices.push_back(cv);
                // next dart: (cu, successor of cv in rotation[cu])
                int back = slot_of(emb, cu, cv);
                int ns = (back + 1) % static_cast<int>(emb.rotation[cu].size());
                cv = cu;
                cs = ns;
            } while (!(cv == v && cs == static_cast<int>(s)));
            f.length = static_cast<int>(f.darts_raw.size());
            std::set<int> distinct(f.vertices.begin(), f.vertices.end());
            f.is_cycle = static_cast<int>(distinct.size()) == f.length && f.length >= 3;
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::map<int, int> face_vector(const PlaneEmbedding& emb) {
    std::map<int, int> fv;
    for (const auto& f : faces(emb))
        if (f.is_cycle) fv[f.length]++;
    return fv;
}

bool is_spherical(const PlaneEmbedding& emb) {
    auto fs = faces(emb);
    auto comps = connected_components(emb.graph);
    // assign each face to the component of its first vertex
    std::vector<int> comp_of(emb.graph.n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> fcount(comps.size(), 0), ecount(comps.size(), 0);
    for (const auto& f : fs) fcount[comp_of[f.vertices[0]]]++;
    for (auto [u, v] : emb.graph.edges()) {
        (void)v;
        ecount[comp_of[u]]++;
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int vc = static_cast<int>(comps[c].size());
        int fc = fcount[c] == 0 ? 1 : fcount[c];  // isolated vertex: one face
        if (vc - ecount[c] + fc != 2) return false;
    }
    return true;
}

PlaneEmbedding embedding_from_oriented_faces(
    int n, const std::vector<std::vector<int>>& oriented_faces, int outer) {
    // collect darts; next[v][u] = w  for consecutive darts (u,v),(v,w)
    std::vector<std::map<int, int>> next(n);
    std::vector<Edge> edges;
    std::set<Edge> dart_seen;
    for (const auto& f : oriented_faces) {
        int k = static_cast<int>(f.size());
        if (k < 2) throw std::invalid_argument("face walk too short");
        for (int i = 0; i < k; ++i) {
            int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
            if (!dart_seen.insert({u, v}).second)
                throw std::invalid_argument("dart used twice in face set");
            edges.push_back(make_edge(u, v));
            next[v][u] = w;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges)
        if (!dart_seen.count({u, v}) || !dart_seen.count({v, u}))
            throw std::invalid_argument("edge missing one dart in face set");

    PlaneEmbedding emb;
    emb.graph = build_graph(n, edges);
    emb.rotation.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (next[v].empty()) continue;
        int start = next[v].begin()->first;
        int cur = start;
        std::size_t deg = emb.graph.adj[v].size();
        do {
            emb.rotation[v].push_back(cur);
            auto it = next[v].find(cur);
            if (it == next[v].end())
                throw std::invalid_argument("face set inconsistent at vertex " +
                                            std::to_string(v));
            cur = it->second;
        } while (cur != start && emb.rotation[v].size() <= deg);
        if (emb.rotation[v].size() != deg || cur != start)
            throw std::invalid_argument(
                "face set does not induce a single rotation cycle at vertex " +
                std::to_string(v));
    }
    // locate the requested outer face among the traced faces
    auto fs = faces(emb);
    if (fs.size() != oriented_faces.size())
        throw std::invalid_argument("face set does not close up");
    if (outer < 0 || outer >= static_cast<int>(oriented_faces.size()))
        throw std::invalid_argument("outer face index out of range");
    const auto& want = oriented_faces[outer];
    std::set<Edge> want_darts;
    int k = static_cast<int>(want.size());
    for (int i = 0; i < k; ++i) want_darts.insert({want[i], want[(i + 1) % k]});
    emb.outer_face = -1;
    for (const auto& f : fs) {
        std::set<Edge> have(f.darts_raw.begin(), f.darts_raw.end());
        if (have == want_darts) {
            emb.outer_face = f.id;
            break;
        }
    }
    if (emb.outer_face < 0)
        throw std::invalid_argument("outer face not found after tracing");
    return emb;
}

PlaneEmbedding embedding_from_faces(int n,
                                    const std::vector<std::vector<int>>& walks,
                                    int outer) {
    // Choose a flip state per walk so that every dart is used exactly once.
    // Shared edge traversed in the same listed direction by two walks =>
    // exactly one of them must flip (parity constraint); 2-color by BFS.
    int m = static_cast<int>(walks.size());
    struct Slot { int face; bool dir; };  // dir: listed as (u,v) with u<v?
    std::map<Edge, std::vector<Slot>> by_edge;
    for (int fi = 0; fi < m; ++fi) {
        const auto& f = walks[fi];
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            int u = f[i], v = f[(i + 1) % k];
            by_edge[make_edge(u, v)].push_back({fi, u < v});
        }
    }
    // parity graph over faces
    std::vector<std::vector<std::pair<int, int>>> cons(m);  // (other, parity)
    for (auto& [e, slots] : by_edge) {
        (void)e;
        if (slots.size() != 2)
            throw std::invalid_argument("embedding_from_faces: edge not on two walks");
        auto [f1, d1] = slots[0];
        auto [f2, d2] = slots[1];
        if (f1 == f2) {
            if (d1 == d2)
                throw std::invalid_argument(
                    "embedding_from_faces: walk repeats a dart");
            continue;  // both directions inside one walk; any flip works
        }
        int parity = (d1 == d2) ? 1 : 0;
        cons[f1].push_back({f2, parity});
        cons[f2].push_back({f1, parity});
    }
    std::vector<int> flip(m, -1);
    for (int s = 0; s < m; ++s) {
        if (flip[s] != -1) continue;
        flip[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto [g, p] : cons[f]) {
                int want = flip[f] ^ p;
                if (flip[g] == -1) {
                    flip[g] = want;
                    stack.push_back(g);
                } else if (flip[g] != want) {
                    throw std::invalid_argument(
                        "embedding_from_faces: inconsistent orientations");
                }
            }
        }
    }
    std::vector<std::vector<int>> oriented = walks;
    for (int fi = 0; fi < m; ++fi)
        if (flip[fi]) std::reverse(oriented[fi].begin(), oriented[fi].end());
    return embedding_from_oriented_faces(n, oriented, outer);
}

int find_face(const PlaneEmbedding& emb, const std::vector<int>& cycle) {
    auto fs = faces(emb);
    std::vector<int> want = cycle;
    std::sort(want.begin(), want.end());
    for (const auto& f : fs) {
        if (f.length != static_cast<int>(cycle.size()) || !f.is_cycle) continue;
        std::vector<int> have = f.vertices;
        std::sort(have.begin(), have.end());
        if (have == want) return f.id;
    }
    return -1;
}

std::string embedding_to_json(const PlaneEmbedding& emb) {
    nlohmann::json j;
    j["n"] = emb.graph.n;
    j["rotation"] = emb.rotation;
    j["outer_face"] = emb.outer_face;
    return j.dump();
}

PlaneEmbedding embedding_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    PlaneEmbedding emb;
    int n = j.at("n").get<int>();
    emb.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    emb.outer_face = j.at("outer_face").get<int>();
    if (static_cast<int>(emb.rotation.size()) != n)
        throw std::invalid_argument("embedding json: rotation size != n");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u : emb.rotation[v]) edges.push_back(make_edge(u, v));
    emb.graph = build_graph(n, edges);
    validate_embedding(emb);
    return emb;
}

}  // namespace pt
