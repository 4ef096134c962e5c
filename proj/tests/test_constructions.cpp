#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pt/constructions.hpp"
#include "pt/embedding.hpp"
#include "pt/oracle.hpp"
#include "pt/patterns.hpp"
#include "pt/planarity.hpp"
#include "pt/theta.hpp"

using namespace pt;

namespace {

void check_handshake(const PlaneEmbedding& emb) {
    int darts = 0;
    for (const auto& f : faces(emb)) darts += f.length;
    CHECK(darts == 2 * emb.graph.edge_count());
}

}  // namespace

TEST_CASE("matching join: order, size, planarity, freeness") {
    CHECK_THROWS_AS(matching_join(3), std::invalid_argument);
    CyclePattern c3c4({3, 4});
    for (int n : {4, 5, 6, 7, 8, 9, 20, 21, 50, 51}) {
        auto emb = matching_join(n);
        CHECK(emb.graph.n == n);
        CHECK(emb.graph.edge_count() == (5 * n) / 2 - 4);
        validate_embedding(emb);
        CHECK(is_spherical(emb));
        check_handshake(emb);
        // independently re-test planarity of the abstract graph
        CHECK(is_planar(emb.graph));
        CHECK(is_pattern_free(emb.graph, c3c4));
    }
    // n=4 degenerates to K4
    CHECK(matching_join(4).graph.edge_count() == 6);
}

TEST_CASE("matching join odd case pins the leftover to the poles") {
    auto emb = matching_join(21);
    int star = 20;
    CHECK(emb.graph.adj[star] == std::vector<int>{0, 1});
}

TEST_CASE("stellated triangulations") {
    for (int t = 0; t <= 3; ++t) {
        auto emb = stellated_triangulation(t);
        long long want = 1;
        for (int i = 0; i <= t; ++i) want *= 3;
        want = (want + 5) / 2;
        CHECK(emb.graph.n == want);
        CHECK(emb.graph.edge_count() == 3 * emb.graph.n - 6);
        CHECK(face_vector(emb) ==
              std::map<int, int>{{3, 2 * emb.graph.n - 4}});
        CHECK(is_spherical(emb));
        CHECK(vertex_connectivity_at_least(emb.graph, 3));
    }
    CHECK(stellated_triangulation(0).graph.n == 4);
    CHECK(stellated_triangulation(1).graph.n == 7);
    CHECK(stellated_triangulation(2).graph.n == 16);
}

TEST_CASE("stellated circumference agrees with the oracle at t<=1") {
    auto g1 = stellated_triangulation(1).graph;
    auto r = longest_cycle(g1);
    CHECK(r.exact);
    CHECK(r.circumference == naive_circumference(g1));
}

TEST_CASE("wheel scaffold shape") {
    auto emb = wheel_scaffold(FamilyParams{4, 14});
    CHECK(emb.graph.n == 16);
    CHECK(emb.graph.edge_count() == 2 * 14 + 3 * 2);  // 34
    auto fv = face_vector(emb);
    for (auto [len, cnt] : fv) {
        (void)cnt;
        CHECK((len == 3 || len == 5));
    }
    check_handshake(emb);
    CHECK(is_spherical(emb));

    auto e2 = wheel_scaffold(FamilyParams{5, 18});
    CHECK(e2.graph.n == 20);
    for (auto [len, cnt] : face_vector(e2)) {
        (void)cnt;
        CHECK((len == 3 || len == 6));
    }

    CHECK_THROWS_AS(wheel_scaffold(FamilyParams{4, 13}), std::invalid_argument);
    CHECK_THROWS_AS(wheel_scaffold(FamilyParams{4, 7}), std::invalid_argument);

    // remainder arc allowed on request: one long face, all others 3 or k+1
    auto e3 = wheel_scaffold(FamilyParams{4, 16, true});
    int longer = 0;
    for (const auto& f : faces(e3))
        if (f.length != 3 && f.length != 5) ++longer;
    CHECK(longer == 1);
}

TEST_CASE("patch eligibility") {
    CHECK(patch_eligibility(triangle_patch(), PatchRole::Inner, 4).eligible);
    CHECK(patch_eligibility(k4_patch(), PatchRole::Rim, 4).eligible);
    // K4 has 4-cycles, so it cannot act as the inner patch for k=4
    auto r = patch_eligibility(k4_patch(), PatchRole::Inner, 4);
    CHECK(!r.eligible);
    CHECK(!r.offending_cycle.empty());
    // without a special vertex, K4 cannot act as the rim patch either
    PatchSpec anon = k4_patch();
    anon.special_vertex.reset();
    CHECK(!patch_eligibility(anon, PatchRole::Rim, 4).eligible);
    // stellated patches are eligible once the circumference is low enough
    CHECK(patch_eligibility(stellated_patch(1), PatchRole::Inner, 8).eligible);
    CHECK(!patch_eligibility(stellated_patch(1), PatchRole::Inner, 7).eligible);
}

TEST_CASE("replace_face identity and growth") {
    auto k4 = std::get<PlaneEmbedding>(test_planarity(
        build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
    auto fs = faces(k4);
    const Face& f0 = fs[0];
    std::array<int, 3> corners{f0.vertices[0], f0.vertices[1], f0.vertices[2]};

    // triangle patch: identity up to face bookkeeping
    auto tri = triangle_patch();
    std::array<int, 3> rev{corners[2], corners[1], corners[0]};
    auto same = replace_face(k4, 0, tri, {0, 1, 2}, rev);
    CHECK(same.graph == k4.graph);
    CHECK(faces(same).size() == 4);

    // orientation-preserving map is rejected
    CHECK_THROWS_AS(replace_face(k4, 0, tri, {0, 1, 2}, corners),
                    std::invalid_argument);

    // K4 patch adds one vertex and three edges
    auto k4p = k4_patch();
    auto grown = replace_face(k4, 0, k4p, k4p.boundary, rev);
    CHECK(grown.graph.n == 5);
    CHECK(grown.graph.edge_count() == 9);
    CHECK(is_spherical(grown));
    check_handshake(grown);

    // replacing a non-3-face is rejected
    auto c5 = std::get<PlaneEmbedding>(test_planarity(
        build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})));
    CHECK_THROWS_AS(replace_face(c5, 0, tri, {0, 1, 2}, {0, 1, 2}),
                    std::invalid_argument);
}

TEST_CASE("gk family order and size formulas") {
    struct Case { int k, ell, n1, n2; };
    auto run = [&](int k, int ell, const PatchSpec& inner, const PatchSpec& rim) {
        auto emb = gk_family(k, ell, inner, rim);
        int q = ell / (2 * k - 1);
        int n1 = inner.emb.graph.n, n2 = rim.emb.graph.n;
        CHECK(emb.graph.n == q * (n1 - 3) + ell * (n2 - 2) + 2);
        CHECK(emb.graph.edge_count() == q * (3 * n1 - 6) + ell * (3 * n2 - 7));
        // equivalent closed form
        CHECK(emb.graph.edge_count() ==
              3 * emb.graph.n - ell + 3 * q - 6);
        CHECK(is_spherical(emb));
        check_handshake(emb);
        CHECK(is_planar(emb.graph));
        return emb;
    };
    run(4, 14, triangle_patch(), triangle_patch());
    run(5, 18, triangle_patch(), triangle_patch());
    auto g = run(4, 14, triangle_patch(), k4_patch());
    CHECK(g.graph.n == 30);
    CHECK(g.graph.edge_count() == 76);

    // rim patch whose special vertex cannot sit on the hub is rejected
    PatchSpec bad = k4_patch();
    bad.special_vertex = 3;  // not on the boundary face
    CHECK_THROWS_AS(gk_family(4, 14, triangle_patch(), bad),
                    std::invalid_argument);
    // ineligible inner patch is rejected with the violated bound
    CHECK_THROWS_AS(gk_family(4, 14, k4_patch(), triangle_patch()),
                    std::invalid_argument);
}

TEST_CASE("every k-cycle of a gk graph passes through the hub") {
    auto emb = gk_family(4, 14, triangle_patch(), k4_patch());
    auto cycles = cycles_of_length(emb.graph, 4);
    CHECK(!cycles.empty());
    for (const auto& c : cycles)
        CHECK(std::find(c.begin(), c.end(), 0) != c.end());
    CHECK(is_pattern_free(emb.graph, CyclePattern({4, 4})));

    // deleting the hub removes every 4-cycle
    std::vector<int> rest;
    for (int v = 1; v < emb.graph.n; ++v) rest.push_back(v);
    auto [no_hub, ids] = induced_subgraph(emb.graph, rest);
    (void)ids;
    CHECK(cycles_of_length(no_hub, 4).empty());
    CHECK(is_pattern_free(no_hub, CyclePattern({4})));
}

TEST_CASE("gk family accepts vertex-rich patches") {
    // stellated(1) has circumference 7, eligible on both roles for k = 8
    auto inner = stellated_patch(1);
    auto rim = stellated_patch(1);
    auto emb = gk_family(8, 30, inner, rim);
    int q = 30 / 15;
    CHECK(emb.graph.n == q * (7 - 3) + 30 * (7 - 2) + 2);
    CHECK(emb.graph.edge_count() == q * (3 * 7 - 6) + 30 * (3 * 7 - 7));
    CHECK(is_spherical(emb));
    CHECK(is_planar(emb.graph));
}

TEST_CASE("gk family with a remainder arc keeps the formulas") {
    auto emb = gk_family(4, 16, triangle_patch(), triangle_patch(), true);
    int q = 16 / 7;
    CHECK(emb.graph.n == 18);
    CHECK(emb.graph.edge_count() == q * 3 + 16 * 2);
    // one face longer than k+1, everything else 3 or k+1
    int longer = 0;
    for (const auto& f : faces(emb))
        if (f.length != 3 && f.length != 5) ++longer;
    CHECK(longer == 1);
    CHECK(is_pattern_free(emb.graph, CyclePattern({4, 4})));
    for (const auto& c : cycles_of_length(emb.graph, 4))
        CHECK(std::find(c.begin(), c.end(), 0) != c.end());
}

TEST_CASE("g0 witnesses") {
    auto a = g0(14);
    CHECK(a.graph.n == 30);
    CHECK(a.graph.edge_count() == 76);
    CHECK(7 * a.graph.edge_count() == 19 * (a.graph.n - 2));
    CHECK(is_pattern_free(a.graph, CyclePattern({4, 4})));

    auto b = g0(21);
    CHECK(b.graph.n == 44);
    CHECK(b.graph.edge_count() == 114);

    CHECK_THROWS_AS(g0(7), std::invalid_argument);
    CHECK_THROWS_AS(g0(15), std::invalid_argument);
}

TEST_CASE("moon moser parameter") {
    CHECK(moon_moser_t(20) == 1);
    CHECK(moon_moser_t(33) == 2);
    CHECK_THROWS_AS(moon_moser_t(4), std::domain_error);
    CHECK_THROWS_AS(moon_moser_t(6), std::domain_error);
    // k=7 puts the logarithm at zero: formula degenerates to -1
    CHECK(moon_moser_t(7) == -1);
}

TEST_CASE("replace_face keeps the Euler identity across full rebuilds") {
    // replace every hub triangle of a small wheel with K4
    auto emb = gk_family(4, 14, triangle_patch(), k4_patch());
    auto fs = faces(emb);
    int total = 0;
    for (const auto& f : fs) total += f.length;
    CHECK(total == 2 * emb.graph.edge_count());
    CHECK(emb.graph.n - emb.graph.edge_count() +
              static_cast<int>(fs.size()) ==
          2);
}
