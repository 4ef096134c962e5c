#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pt/canonical.hpp"
#include "pt/embedding.hpp"
#include "pt/graph.hpp"
#include "pt/graph6.hpp"
#include "pt/planarity.hpp"

using namespace pt;

namespace {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return build_graph(n, es);
}

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return build_graph(n, es);
}

Graph k33() {
    std::vector<Edge> es;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
    return build_graph(6, es);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) es.emplace_back(u, v);
    return build_graph(n, es);
}

}  // namespace

TEST_CASE("build_graph basics") {
    Graph k4 = complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(cycle(3).edge_count() == 3);
    // duplicates collapse
    Graph k2 = build_graph(2, {{0, 1}, {0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("graph6 matches hand-encoded values") {
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(build_graph(1, {})) == "@");
    CHECK(decode_graph6("C~") == complete(4));
}

TEST_CASE("graph6 round trip is the identity") {
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 1 + static_cast<int>(rng() % 62);
        Graph g = random_graph(n, 0.3, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    // extended size prefix
    Graph big = cycle(100);
    CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(decode_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(decode_graph6("C"), Graph6ParseError);      // truncated
    CHECK_THROWS_AS(decode_graph6("C~~"), Graph6ParseError);    // trailing
    CHECK_THROWS_AS(decode_graph6("B\x01"), Graph6ParseError);  // bad char
    try {
        decode_graph6("C");
    } catch (const Graph6ParseError& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("faces of K4 and C5") {
    auto k4emb = std::get<PlaneEmbedding>(test_planarity(complete(4)));
    auto fs = faces(k4emb);
    CHECK(fs.size() == 4);
    for (const auto& f : fs) CHECK(f.length == 3);
    CHECK(face_vector(k4emb) == std::map<int, int>{{3, 4}});

    auto c5emb = std::get<PlaneEmbedding>(test_planarity(cycle(5)));
    CHECK(face_vector(c5emb) == std::map<int, int>{{5, 2}});
}

TEST_CASE("dart partition and Euler identity on random planar graphs") {
    std::mt19937_64 rng(99);
    int planar_seen = 0;
    for (int rep = 0; rep < 300; ++rep) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.4, rng);
        auto res = test_planarity(g);
        if (!std::holds_alternative<PlaneEmbedding>(res)) continue;
        ++planar_seen;
        const auto& emb = std::get<PlaneEmbedding>(res);
        validate_embedding(emb);
        CHECK(is_spherical(emb));
        int darts = 0;
        for (const auto& f : faces(emb)) darts += f.length;
        CHECK(darts == 2 * g.edge_count());
    }
    CHECK(planar_seen > 100);
}

TEST_CASE("planarity decisions carry verified certificates") {
    // K5 and K33 are not planar and yield verified witnesses
    auto r5 = test_planarity(complete(5));
    REQUIRE(std::holds_alternative<KuratowskiWitness>(r5));
    auto w5 = std::get<KuratowskiWitness>(r5);
    CHECK(w5.kind == KuratowskiWitness::Kind::K5);
    CHECK(verify_kuratowski(complete(5), w5));

    auto r33 = test_planarity(k33());
    REQUIRE(std::holds_alternative<KuratowskiWitness>(r33));
    auto w33 = std::get<KuratowskiWitness>(r33);
    CHECK(w33.kind == KuratowskiWitness::Kind::K33);
    CHECK(verify_kuratowski(k33(), w33));

    // subdivided K5 (each edge split once) is still nonplanar
    {
        Graph k5 = complete(5);
        std::vector<Edge> es;
        int next = 5;
        for (auto [u, v] : k5.edges()) {
            es.push_back(make_edge(u, next));
            es.push_back(make_edge(v, next));
            ++next;
        }
        Graph sub = build_graph(next, es);
        auto r = test_planarity(sub);
        REQUIRE(std::holds_alternative<KuratowskiWitness>(r));
        CHECK(verify_kuratowski(sub, std::get<KuratowskiWitness>(r)));
    }
}

TEST_CASE("planarity on every graph with n <= 6") {
    // each outcome is self-certifying, so sweeping everything is a full test
    for (int n = 1; n <= 6; ++n) {
        int planar = 0, nonplanar = 0;
        testor::for_each_labeled_graph(n, [&](const Graph& g) {
            auto res = test_planarity(g);
            if (std::holds_alternative<PlaneEmbedding>(res)) {
                ++planar;
                CHECK(is_spherical(std::get<PlaneEmbedding>(res)));
            } else {
                ++nonplanar;
                CHECK(verify_kuratowski(g, std::get<KuratowskiWitness>(res)));
            }
        });
        if (n < 5) CHECK(nonplanar == 0);
        if (n == 5) CHECK(nonplanar == 1);  // only K5 itself
    }
}

TEST_CASE("disconnected and cut-vertex embeddings") {
    // two triangles sharing nothing, plus an isolated vertex
    Graph g = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto emb = std::get<PlaneEmbedding>(test_planarity(g));
    CHECK(is_spherical(emb));
    CHECK(faces(emb).size() == 4);

    // bowtie: cut vertex, outer walk revisits the middle
    Graph bow = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bemb = std::get<PlaneEmbedding>(test_planarity(bow));
    CHECK(is_spherical(bemb));
    int cycles = 0, walks = 0;
    for (const auto& f : faces(bemb)) (f.is_cycle ? cycles : walks)++;
    CHECK(cycles == 2);
    CHECK(walks == 1);
}

TEST_CASE("canonical class counts match the known sequence") {
    // graphs up to isomorphism on 4, 5, 6 vertices: 11, 34, 156
    std::vector<std::size_t> want{11, 34, 156};
    for (int n = 4; n <= 6; ++n) {
        std::set<CanonicalForm> forms;
        testor::for_each_labeled_graph(n, [&](const Graph& g) {
            forms.insert(canonical_form(g));
        });
        CHECK(forms.size() == want[n - 4]);
    }
}

TEST_CASE("canonical forms equal iff isomorphic") {
    // relabeled C4 vs C4; P4 differs
    Graph c4 = cycle(4);
    Graph c4b = build_graph(4, {{2, 1}, {1, 3}, {3, 0}, {0, 2}});
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(canonical_form(c4) == canonical_form(c4b));
    CHECK(canonical_form(c4) != canonical_form(p4));

    // all graphs on 4 vertices: 11 classes
    std::set<CanonicalForm> forms;
    testor::for_each_labeled_graph(4, [&](const Graph& g) {
        forms.insert(canonical_form(g));
    });
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form respects the permutation oracle up to n = 6") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 400; ++rep) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph a = random_graph(n, 0.5, rng);
        Graph b = random_graph(n, 0.5, rng);
        CHECK((canonical_form(a) == canonical_form(b)) ==
              testor::brute_isomorphic(a, b));
        // random relabeling maps to the same form
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> es;
        for (auto [u, v] : a.edges()) es.push_back(make_edge(perm[u], perm[v]));
        CHECK(canonical_form(build_graph(n, es)) == canonical_form(a));
    }
}

TEST_CASE("canonical form handles highly symmetric graphs") {
    CHECK(canonical_form(complete(9)) != canonical_form(complete(8)));
    CHECK(canonical_form(build_graph(9, {})) == canonical_form(build_graph(9, {})));
    // union of five disjoint edges
    std::vector<Edge> m;
    for (int i = 0; i < 5; ++i) m.push_back(make_edge(2 * i, 2 * i + 1));
    Graph matching = build_graph(10, m);
    auto c = canonicalize(matching);
    CHECK(c.canonical_graph.edge_count() == 5);
}

TEST_CASE("embedding json round trip") {
    auto emb = std::get<PlaneEmbedding>(test_planarity(complete(4)));
    auto back = embedding_from_json(embedding_to_json(emb));
    CHECK(back.graph == emb.graph);
    CHECK(back.rotation == emb.rotation);
    CHECK(back.outer_face == emb.outer_face);
}

TEST_CASE("embedding_from_faces solves orientations") {
    // K4 as four unoriented triangles
    std::vector<std::vector<int>> walks = {
        {0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 2}};
    auto emb = embedding_from_faces(4, walks, 3);
    CHECK(emb.graph == complete(4));
    CHECK(is_spherical(emb));
    CHECK(faces(emb).size() == 4);
    // outer face holds the requested triangle
    auto fs = faces(emb);
    std::vector<int> outer = fs[emb.outer_face].vertices;
    std::sort(outer.begin(), outer.end());
    CHECK(outer == std::vector<int>{0, 1, 2});
}
