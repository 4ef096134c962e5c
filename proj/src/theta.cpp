#include "pt/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "pt/canonical.hpp"
#include "pt/graph6.hpp"
#include "pt/patterns.hpp"

namespace pt {

namespace {

// faces flanking edge (u,v): the face of dart (u,v) and of dart (v,u)
std::array<int, 2> flanking_faces(const std::vector<Face>& fs, Edge e) {
    int a = -1, b = -1;
    for (const auto& f : fs)
        for (auto [x, y] : f.darts_raw) {
            if (x == e.first && y == e.second) a = f.id;
            if (x == e.second && y == e.first) b = f.id;
        }
    return {a, b};
}

}  // namespace

InteriorEdgeSet interior_edges(const PlaneEmbedding& emb) {
    auto fs = faces(emb);
    // dart -> face id
    std::map<Edge, int> face_of;
    for (const auto& f : fs)
        for (auto d : f.darts_raw) face_of[d] = f.id;
    InteriorEdgeSet out;
    for (Edge e : emb.graph.edges()) {
        int fa = face_of.at({e.first, e.second});
        int fb = face_of.at({e.second, e.first});
        if (fa == fb) continue;
        const Face &A = fs[fa], &B = fs[fb];
        if (!(A.is_cycle && A.length == 3 && B.is_cycle && B.length == 3)) continue;
        // distinct apexes: the union must span four vertices
        int apex_a = -1, apex_b = -1;
        for (int v : A.vertices)
            if (v != e.first && v != e.second) apex_a = v;
        for (int v : B.vertices)
            if (v != e.first && v != e.second) apex_b = v;
        if (apex_a == apex_b) continue;  // K3 component: both sides same triangle
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<int> ThetaGraph::vertices() const {
    std::vector<int> v{base.first, base.second, apexes[0], apexes[1]};
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Edge> ThetaGraph::edges() const {
    std::vector<Edge> es{base,
                         make_edge(base.first, apexes[0]),
                         make_edge(base.second, apexes[0]),
                         make_edge(base.first, apexes[1]),
                         make_edge(base.second, apexes[1])};
    std::sort(es.begin(), es.end());
    return es;
}

ThetaGraph theta_graph(const PlaneEmbedding& emb, Edge e) {
    e = make_edge(e.first, e.second);
    auto fs = faces(emb);
    auto [fa, fb] = flanking_faces(fs, e);
    if (fa < 0 || fb < 0) throw std::invalid_argument("theta_graph: not an edge");
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("theta_graph: edge (" +
                                    std::to_string(e.first) + "," +
                                    std::to_string(e.second) +
                                    ") is not interior: " + why + " (face lengths " +
                                    std::to_string(fs[fa].length) + "," +
                                    std::to_string(fs[fb].length) + ")");
    };
    if (fa == fb) bad("both sides are one face");
    if (!(fs[fa].is_cycle && fs[fa].length == 3 && fs[fb].is_cycle &&
          fs[fb].length == 3))
        bad("a flanking face is not a 3-face");
    ThetaGraph t;
    t.base = e;
    t.face_ids = {fa, fb};
    int apex_a = -1, apex_b = -1;
    for (int v : fs[fa].vertices)
        if (v != e.first && v != e.second) apex_a = v;
    for (int v : fs[fb].vertices)
        if (v != e.first && v != e.second) apex_b = v;
    if (apex_a == apex_b) bad("flanking triangles coincide");
    t.apexes = {std::min(apex_a, apex_b), std::max(apex_a, apex_b)};
    return t;
}

std::string to_string(HClass c) {
    switch (c) {
        case HClass::H0: return "H0";
        case HClass::H1: return "H1";
        case HClass::H2: return "H2";
        case HClass::H3: return "H3";
        case HClass::H4: return "H4";
        case HClass::H5: return "H5";
        case HClass::H6: return "H6";
        case HClass::H01: return "H0,1";
        case HClass::H02: return "H0,2";
        case HClass::H03: return "H0,3";
        case HClass::H04: return "H0,4";
        case HClass::H05: return "H0,5";
        case HClass::H13: return "H1,3";
        case HClass::H31: return "H3,1";
        case HClass::Unrecognized: return "Unrecognized";
    }
    return "?";
}

// ---- catalog -----------------------------------------------------------
//
// Vertex keys used below (one drawing per class):
//   H0 : x0 y1 u2 a3 b4 v5      two thetas glued along the side edge ya
//   H1 : x0 y1 v1=2 b3 a4 v2=5  apexes of xy are the ends of side v1b of ab
//   H2 : x0 y1 a2 b3 v1=4 v2=5  both bases share the apex pair {v1,v2}
//   H3 : x0 y1 a2 b3 v1=4 v2=5  apexes of xy are the base ends of ab
//   H4 : x0 y1 a2 b3 v1=4       K4 on {x,y,a,b} plus v1 on edge ab
//   H5 : x0 y1 a2 b3 v1=4       K5 minus xb (triangular bipyramid)
//   H6 : K4, all four triangles faces (host component equals K4)
// Extensions attach further thetas along one base endpoint, following the
// same keys with fresh vertices appended.

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](HClass cls, int n, std::vector<Edge> es,
                   std::vector<std::array<int, 3>> tris, std::vector<int> pseudo) {
        CatalogEntry e;
        e.cls = cls;
        e.graph = build_graph(n, es);
        e.member_triangles = std::move(tris);
        std::sort(pseudo.begin(), pseudo.end());
        e.pseudo_face_lengths = std::move(pseudo);
        cat.push_back(std::move(e));
    };

    // H0: 6 vertices, 9 edges, pseudo-faces {6}
    std::vector<Edge> h0 = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                            {3, 4}, {3, 5}, {4, 5}, {1, 4}};
    add(HClass::H0, 6, h0,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}}}, {6});

    // H1: 6 vertices, 10 edges, pseudo-faces {3,5}
    std::vector<Edge> h1 = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                            {4, 3}, {4, 2}, {3, 2}, {4, 5}, {3, 5}};
    add(HClass::H1, 6, h1,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{4, 3, 2}}, {{4, 3, 5}}}, {3, 5});

    // H2: 6 vertices, 10 edges, pseudo-faces {4,4}
    std::vector<Edge> h2 = {{0, 1}, {0, 4}, {1, 4}, {0, 5}, {1, 5},
                            {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}};
    add(HClass::H2, 6, h2,
        {{{0, 1, 4}}, {{0, 1, 5}}, {{2, 3, 4}}, {{2, 3, 5}}}, {4, 4});

    // H3: 6 vertices, 10 edges, pseudo-faces {4,4}
    std::vector<Edge> h3 = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                            {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}};
    add(HClass::H3, 6, h3,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{2, 3, 4}}, {{2, 3, 5}}}, {4, 4});

    // H4: 5 vertices, 8 edges, pseudo-faces {4}
    std::vector<Edge> h4 = {{0, 1}, {0, 2}, {1, 2}, {0, 3},
                            {1, 3}, {2, 3}, {2, 4}, {3, 4}};
    add(HClass::H4, 5, h4,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{2, 3, 0}}, {{2, 3, 4}}}, {4});

    // H5: 5 vertices, 9 edges (K5 minus {0,3}), pseudo-faces {3,3}
    std::vector<Edge> h5 = {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3},
                            {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    add(HClass::H5, 5, h5,
        {{{0, 1, 2}}, {{0, 1, 4}}, {{2, 3, 1}}, {{2, 3, 4}}}, {3, 3});

    // H6: K4, no pseudo-faces
    std::vector<Edge> h6 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    add(HClass::H6, 4, h6,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{2, 3, 0}}, {{2, 3, 1}}}, {});

    // H0 extensions: fresh vertices z6 c7, then p8 q9, then w10 u11
    auto h01 = h0;
    h01.insert(h01.end(), {{1, 6}, {1, 7}, {6, 7}, {6, 4}});
    add(HClass::H01, 8, h01,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}}, {{1, 6, 7}}, {{1, 6, 4}}},
        {8});

    auto h02 = h0;
    h02.insert(h02.end(), {{1, 6}, {1, 7}, {6, 7}, {1, 5}, {6, 5}});
    add(HClass::H02, 8, h02,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}}, {{1, 6, 7}}, {{1, 6, 5}}},
        {3, 7});

    auto h03 = h02;
    h03.insert(h03.end(), {{1, 8}, {1, 9}, {8, 9}, {8, 4}});
    add(HClass::H03, 10, h03,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}},
         {{1, 6, 7}}, {{1, 6, 5}}, {{1, 8, 9}}, {{1, 8, 4}}},
        {5, 7});

    auto h04 = h02;
    h04.insert(h04.end(), {{1, 8}, {1, 9}, {8, 9}, {8, 5}});
    add(HClass::H04, 10, h04,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}},
         {{1, 6, 7}}, {{1, 6, 5}}, {{1, 8, 9}}, {{1, 8, 5}}},
        {5, 7});

    auto h05 = h03;
    h05.insert(h05.end(), {{1, 10}, {1, 11}, {10, 11}, {10, 5}});
    add(HClass::H05, 12, h05,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{3, 4, 1}}, {{3, 4, 5}},
         {{1, 6, 7}}, {{1, 6, 5}}, {{1, 8, 9}}, {{1, 8, 4}},
         {{1, 10, 11}}, {{1, 10, 5}}},
        {7, 7});

    // H1,3: theta on base bz with apexes {c, v1}; fresh z6 c7
    auto h13 = h1;
    h13.insert(h13.end(), {{3, 6}, {6, 7}, {3, 7}, {6, 2}});
    add(HClass::H13, 8, h13,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{4, 3, 2}}, {{4, 3, 5}}, {{3, 6, 7}}, {{3, 6, 2}}},
        {5, 5});

    // H3,1: theta on base yz with apexes {a, b}; fresh z6
    auto h31 = h3;
    h31.insert(h31.end(), {{1, 6}, {6, 2}, {6, 3}});
    add(HClass::H31, 7, h31,
        {{{0, 1, 2}}, {{0, 1, 3}}, {{2, 3, 4}}, {{2, 3, 5}}, {{1, 6, 2}}, {{1, 6, 3}}},
        {4, 4});

    return cat;
}

const std::map<CanonicalForm, const CatalogEntry*>& catalog_index() {
    static const auto* index = [] {
        auto* m = new std::map<CanonicalForm, const CatalogEntry*>;
        for (const auto& e : hclass_catalog()) {
            auto [it, fresh] = m->emplace(canonical_form(e.graph), &e);
            if (!fresh) throw std::logic_error("catalog entries not distinct");
            (void)it;
        }
        return m;
    }();
    return *index;
}

// sub-embedding induced by an edge set: rotations restricted to those edges
PlaneEmbedding sub_embedding(const PlaneEmbedding& emb,
                             const std::set<Edge>& keep_edges) {
    PlaneEmbedding sub;
    sub.graph.n = emb.graph.n;
    sub.graph.adj.assign(emb.graph.n, {});
    sub.rotation.assign(emb.graph.n, {});
    for (int v = 0; v < emb.graph.n; ++v)
        for (int u : emb.rotation[v])
            if (keep_edges.count(make_edge(u, v))) {
                sub.rotation[v].push_back(u);
                sub.graph.adj[v].push_back(u);
            }
    for (auto& a : sub.graph.adj) {
        auto sorted = a;
        std::sort(sorted.begin(), sorted.end());
        a = sorted;
    }
    sub.outer_face = 0;
    return sub;
}

// classification core: canonical lookup + face-profile verification
HClass classify_union(const PlaneEmbedding& emb,
                      const std::vector<ThetaGraph>& thetas) {
    std::set<Edge> uedges;
    for (const auto& t : thetas)
        for (Edge e : t.edges()) uedges.insert(e);
    std::vector<int> uverts;
    for (const auto& t : thetas)
        for (int v : t.vertices()) uverts.push_back(v);
    std::sort(uverts.begin(), uverts.end());
    uverts.erase(std::unique(uverts.begin(), uverts.end()), uverts.end());

    auto [ug, old_ids] = induced_subgraph(
        [&] {
            Graph g;
            g.n = emb.graph.n;
            g.adj.assign(emb.graph.n, {});
            for (Edge e : uedges) {
                g.adj[e.first].push_back(e.second);
                g.adj[e.second].push_back(e.first);
            }
            for (auto& a : g.adj) std::sort(a.begin(), a.end());
            return g;
        }(),
        uverts);

    auto it = catalog_index().find(canonical_form(ug));
    if (it == catalog_index().end()) return HClass::Unrecognized;
    const CatalogEntry& entry = *it->second;

    // verify the drawing: member triangles are faces of the sub-embedding
    // and the remaining faces have the catalog's pseudo profile
    PlaneEmbedding sub = sub_embedding(emb, uedges);
    auto fs = faces(sub);
    std::set<std::array<int, 3>> members;
    for (const auto& t : thetas) {
        auto [u, v] = t.base;
        for (int a : t.apexes) {
            std::array<int, 3> tri{u, v, a};
            std::sort(tri.begin(), tri.end());
            members.insert(tri);
        }
    }
    std::vector<int> pseudo;
    std::size_t member_faces = 0;
    for (const auto& f : fs) {
        if (f.length == 0) continue;  // vertices outside the union
        bool is_member = false;
        if (f.is_cycle && f.length == 3) {
            std::array<int, 3> tri{f.vertices[0], f.vertices[1], f.vertices[2]};
            std::sort(tri.begin(), tri.end());
            if (members.count(tri)) {
                is_member = true;
                ++member_faces;
            }
        }
        if (!is_member) pseudo.push_back(f.length);
    }
    std::sort(pseudo.begin(), pseudo.end());
    if (member_faces != members.size()) return HClass::Unrecognized;
    if (pseudo != entry.pseudo_face_lengths) return HClass::Unrecognized;
    return entry.cls;
}

}  // namespace

const std::vector<CatalogEntry>& hclass_catalog() {
    static const auto* cat = new std::vector<CatalogEntry>(build_catalog());
    return *cat;
}

HClass classify_pair(const PlaneEmbedding& emb, Edge e, Edge f) {
    e = make_edge(e.first, e.second);
    f = make_edge(f.first, f.second);
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        throw std::invalid_argument("classify_pair: edges are not independent");
    ThetaGraph te = theta_graph(emb, e), tf = theta_graph(emb, f);
    auto ve = te.vertices(), vf = tf.vertices();
    std::vector<int> common;
    std::set_intersection(ve.begin(), ve.end(), vf.begin(), vf.end(),
                          std::back_inserter(common));
    if (common.size() <= 1) return HClass::Unrecognized;  // host has C3+C4
    return classify_union(emb, {te, tf});
}

HClass classify_theta_union(const PlaneEmbedding& emb,
                            const std::vector<ThetaGraph>& thetas) {
    return classify_union(emb, thetas);
}

std::vector<Face> pseudo_faces(const PlaneEmbedding& emb,
                               const std::vector<ThetaGraph>& thetas) {
    std::set<Edge> uedges;
    std::set<std::array<int, 3>> members;
    for (const auto& t : thetas) {
        for (Edge e : t.edges()) uedges.insert(e);
        auto [u, v] = t.base;
        for (int a : t.apexes) {
            std::array<int, 3> tri{u, v, a};
            std::sort(tri.begin(), tri.end());
            members.insert(tri);
        }
    }
    PlaneEmbedding sub = sub_embedding(emb, uedges);
    std::vector<Face> out;
    for (auto& f : faces(sub)) {
        if (f.length == 0) continue;
        if (f.is_cycle && f.length == 3) {
            std::array<int, 3> tri{f.vertices[0], f.vertices[1], f.vertices[2]};
            std::sort(tri.begin(), tri.end());
            if (members.count(tri)) continue;
        }
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

int class_index(HClass c) {
    switch (c) {
        case HClass::H0: return 0;
        case HClass::H1: return 1;
        case HClass::H2: return 2;
        case HClass::H3: return 3;
        case HClass::H4: return 4;
        case HClass::H5: return 5;
        default: return -1;  // H6 and extensions never seed a closure
    }
}

ClosureResult closure_with_order(
    const PlaneEmbedding& emb, const InteriorEdgeSet& ei,
    const std::function<std::optional<Edge>(const std::set<int>&,
                                            const std::vector<Edge>&)>& pick_next) {
    ClosureResult res;
    // all independent pairs with a catalog class in [0,5]
    struct PairInfo { Edge e, f; int idx; HClass cls; };
    std::vector<PairInfo> pairs;
    for (std::size_t i = 0; i < ei.edges.size(); ++i)
        for (std::size_t j = i + 1; j < ei.edges.size(); ++j) {
            Edge e = ei.edges[i], f = ei.edges[j];
            if (e.first == f.first || e.first == f.second || e.second == f.first ||
                e.second == f.second)
                continue;
            HClass c = classify_pair(emb, e, f);
            int idx = class_index(c);
            if (idx >= 0) pairs.push_back({e, f, idx, c});
        }
    if (pairs.empty()) {
        res.hypothesis_met = false;
        res.reason =
            "no independent interior pair realizes a catalog configuration";
        return res;
    }
    // minimal class, then lexicographically least pair
    std::sort(pairs.begin(), pairs.end(), [](const PairInfo& a, const PairInfo& b) {
        if (a.idx != b.idx) return a.idx < b.idx;
        if (a.e != b.e) return a.e < b.e;
        return a.f < b.f;
    });
    res.hypothesis_met = true;
    res.e_star = pairs[0].e;
    res.f_star = pairs[0].f;
    res.ell_star = pairs[0].idx;
    res.h_star = pairs[0].cls;

    std::vector<ThetaGraph> thetas{theta_graph(emb, res.e_star),
                                   theta_graph(emb, res.f_star)};
    std::set<int> verts;
    std::vector<Edge> used{res.e_star, res.f_star};
    for (const auto& t : thetas)
        for (int v : t.vertices()) verts.insert(v);

    while (true) {
        auto next = pick_next(verts, used);
        if (!next) break;
        Edge e = *next;
        used.push_back(e);
        res.closure_bases.push_back(e);
        ThetaGraph t = theta_graph(emb, e);
        for (int v : t.vertices()) verts.insert(v);
        thetas.push_back(t);
    }

    res.hmax_vertices.assign(verts.begin(), verts.end());
    std::set<Edge> hmax_edges;
    for (const auto& t : thetas)
        for (Edge e : t.edges()) hmax_edges.insert(e);
    res.hmax_edges.assign(hmax_edges.begin(), hmax_edges.end());
    res.hmax_class = classify_union(emb, thetas);

    for (int u : res.hmax_vertices)
        for (int v : emb.graph.adj[u])
            if (u < v && verts.count(v)) res.hat_hmax_edges.push_back(make_edge(u, v));
    std::sort(res.hat_hmax_edges.begin(), res.hat_hmax_edges.end());

    for (Edge e : ei.edges)
        if (!verts.count(e.first) && !verts.count(e.second)) res.e_out.push_back(e);
    return res;
}

}  // namespace

ClosureResult generating_closure(const PlaneEmbedding& emb) {
    InteriorEdgeSet ei = interior_edges(emb);
    if (interior_matching_number(emb) < 2) {
        ClosureResult res;
        res.hypothesis_met = false;
        res.reason = "interior-edge matching number below 2";
        return res;
    }
    // canonical extension order: scan interior edges in edge order each round
    return closure_with_order(
        emb, ei,
        [&](const std::set<int>& verts,
            const std::vector<Edge>& used) -> std::optional<Edge> {
            for (Edge e : ei.edges) {
                if (std::find(used.begin(), used.end(), e) != used.end()) continue;
                int inside = (verts.count(e.first) ? 1 : 0) +
                             (verts.count(e.second) ? 1 : 0);
                if (inside == 1) return e;
            }
            return std::nullopt;
        });
}

std::set<HClass> closure_reachable_classes(const PlaneEmbedding& emb) {
    std::set<HClass> out;
    InteriorEdgeSet ei = interior_edges(emb);
    if (interior_matching_number(emb) < 2) return out;

    // depth-first over all extension orders; states keyed by chosen edge set
    std::set<std::vector<Edge>> seen;
    std::function<void(std::vector<Edge>, std::set<int>)> walk =
        [&](std::vector<Edge> used, std::set<int> verts) {
            std::vector<Edge> options;
            for (Edge e : ei.edges) {
                if (std::find(used.begin(), used.end(), e) != used.end()) continue;
                int inside = (verts.count(e.first) ? 1 : 0) +
                             (verts.count(e.second) ? 1 : 0);
                if (inside == 1) options.push_back(e);
            }
            if (options.empty()) {
                std::vector<ThetaGraph> thetas;
                for (Edge e : used) thetas.push_back(theta_graph(emb, e));
                out.insert(classify_union(emb, thetas));
                return;
            }
            for (Edge e : options) {
                auto u2 = used;
                u2.push_back(e);
                auto key = u2;
                std::sort(key.begin(), key.end());
                if (!seen.insert(key).second) continue;
                auto v2 = verts;
                ThetaGraph t = theta_graph(emb, e);
                for (int v : t.vertices()) v2.insert(v);
                walk(std::move(u2), std::move(v2));
            }
        };

    ClosureResult seed = generating_closure(emb);
    if (!seed.hypothesis_met) return out;
    std::set<int> verts;
    for (Edge e : {seed.e_star, seed.f_star}) {
        ThetaGraph t = theta_graph(emb, e);
        for (int v : t.vertices()) verts.insert(v);
    }
    walk({seed.e_star, seed.f_star}, verts);
    return out;
}

int interior_matching_number(const PlaneEmbedding& emb) {
    auto ei = interior_edges(emb).edges;
    Graph h;
    h.n = emb.graph.n;
    h.adj.assign(h.n, {});
    for (auto [u, v] : ei) {
        h.adj[u].push_back(v);
        h.adj[v].push_back(u);
    }
    for (auto& a : h.adj) std::sort(a.begin(), a.end());

    // exact branch and bound per connected component: branch on the first
    // free vertex (match it along each incident edge, or leave it free)
    int total = 0;
    for (const auto& comp : connected_components(h)) {
        if (comp.size() == 1) continue;
        std::vector<char> used(h.n, 0);
        int best = 0;
        std::function<void(std::size_t, int)> rec = [&](std::size_t at, int cur) {
            int free_left = 0;
            for (std::size_t i = at; i < comp.size(); ++i)
                if (!used[comp[i]]) ++free_left;
            if (cur + free_left / 2 <= best) {
                best = std::max(best, cur);
                return;
            }
            std::size_t i = at;
            while (i < comp.size() && used[comp[i]]) ++i;
            if (i == comp.size()) {
                best = std::max(best, cur);
                return;
            }
            int v = comp[i];
            used[v] = 1;
            for (int w : h.adj[v]) {
                if (used[w]) continue;
                used[w] = 1;
                rec(i + 1, cur + 1);
                used[w] = 0;
            }
            rec(i + 1, cur);  // v stays unmatched
            used[v] = 0;
        };
        rec(0, 0);
        total += best;
    }
    return total;
}

// ---- lemma audit ---------------------------------------------------------

std::string to_string(LemmaRecord::Status s) {
    switch (s) {
        case LemmaRecord::Status::Pass: return "pass";
        case LemmaRecord::Status::Fail: return "fail";
        case LemmaRecord::Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string lemma_record_to_json(const LemmaRecord& r) {
    nlohmann::json j;
    j["graph"] = r.graph6;
    j["lemma"] = r.lemma;
    j["status"] = to_string(r.status);
    if (!r.witness_json.empty()) j["witness"] = nlohmann::json::parse(r.witness_json);
    return j.dump();
}

std::vector<LemmaRecord> lemma_audit(const std::vector<PlaneEmbedding>& corpus) {
    std::vector<LemmaRecord> out;
    const CyclePattern c3c4({3, 4});
    for (const auto& emb : corpus) {
        const Graph& g = emb.graph;
        std::string g6 = encode_graph6(g);
        auto push = [&](const std::string& lemma, LemmaRecord::Status st,
                        const std::string& wit = "") {
            out.push_back({g6, lemma, st, wit});
        };

        if (auto w = find_disjoint_cycles(g, c3c4)) {
            nlohmann::json j;
            j["cycles"] = w->cycles;
            push("corpus-freeness", LemmaRecord::Status::Fail, j.dump());
            continue;
        }

        InteriorEdgeSet ei = interior_edges(emb);
        std::vector<std::pair<Edge, Edge>> indep;
        for (std::size_t i = 0; i < ei.edges.size(); ++i)
            for (std::size_t j = i + 1; j < ei.edges.size(); ++j) {
                Edge e = ei.edges[i], f = ei.edges[j];
                if (e.first == f.first || e.first == f.second ||
                    e.second == f.first || e.second == f.second)
                    continue;
                indep.emplace_back(e, f);
            }

        // theta-intersection (every independent pair shares >= 2 vertices)
        if (indep.empty()) {
            push("theta-intersection", LemmaRecord::Status::NotApplicable);
            push("theta-classification", LemmaRecord::Status::NotApplicable);
        } else {
            bool ok = true;
            std::string wit;
            for (auto [e, f] : indep) {
                auto ve = theta_graph(emb, e).vertices();
                auto vf = theta_graph(emb, f).vertices();
                std::vector<int> common;
                std::set_intersection(ve.begin(), ve.end(), vf.begin(), vf.end(),
                                      std::back_inserter(common));
                if (common.size() < 2) {
                    ok = false;
                    nlohmann::json j;
                    j["e"] = {e.first, e.second};
                    j["f"] = {f.first, f.second};
                    wit = j.dump();
                    break;
                }
            }
            push("theta-intersection",
                 ok ? LemmaRecord::Status::Pass : LemmaRecord::Status::Fail, wit);

            bool cls_ok = true;
            std::string cls_wit;
            for (auto [e, f] : indep) {
                HClass c = classify_pair(emb, e, f);
                if (c == HClass::Unrecognized) {
                    cls_ok = false;
                    nlohmann::json j;
                    j["e"] = {e.first, e.second};
                    j["f"] = {f.first, f.second};
                    cls_wit = j.dump();
                    break;
                }
            }
            push("theta-classification",
                 cls_ok ? LemmaRecord::Status::Pass : LemmaRecord::Status::Fail,
                 cls_wit);
        }

        // face-count: hypotheses need matching number <= 1
        int alpha = interior_matching_number(emb);
        if (alpha <= 1) {
            int f34 = 0;
            for (auto& [len, cnt] : face_vector(emb))
                if (len == 3 || len == 4) f34 += cnt;
            bool ok = static_cast<int>(ei.edges.size()) <= 9 || f34 <= g.n - 1;
            push("face-count",
                 ok ? LemmaRecord::Status::Pass : LemmaRecord::Status::Fail);
        } else {
            push("face-count", LemmaRecord::Status::NotApplicable);
        }

        // eout-matching via the closure
        if (alpha >= 2) {
            ClosureResult cr = generating_closure(emb);
            if (!cr.hypothesis_met) {
                push("eout-matching", LemmaRecord::Status::NotApplicable);
            } else {
                bool applicable = true, want_empty = false;
                switch (cr.hmax_class) {
                    case HClass::H0:
                    case HClass::H1:
                    case HClass::H2:
                    case HClass::H3:
                    case HClass::H4:
                    case HClass::H13:
                        want_empty = false;
                        break;
                    case HClass::H5:
                    case HClass::H31:
                    case HClass::H01:
                    case HClass::H02:
                    case HClass::H03:
                    case HClass::H04:
                    case HClass::H05:
                        want_empty = true;
                        break;
                    default:
                        applicable = false;
                }
                if (!applicable) {
                    push("eout-matching", LemmaRecord::Status::NotApplicable);
                } else {
                    bool ok;
                    if (want_empty) {
                        ok = cr.e_out.empty();
                    } else {
                        ok = true;
                        std::set<int> seen;
                        for (Edge e : cr.e_out)
                            if (!seen.insert(e.first).second ||
                                !seen.insert(e.second).second)
                                ok = false;
                    }
                    nlohmann::json j;
                    j["hmax_class"] = to_string(cr.hmax_class);
                    j["e_out_size"] = cr.e_out.size();
                    push("eout-matching",
                         ok ? LemmaRecord::Status::Pass : LemmaRecord::Status::Fail,
                         j.dump());
                }
            }
        } else {
            push("eout-matching", LemmaRecord::Status::NotApplicable);
        }
    }
    return out;
}

}  // namespace pt
