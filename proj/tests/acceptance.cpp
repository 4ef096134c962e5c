// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Heavy checks parallelize over PLANARTURAN_JOBS workers (default:
// hardware concurrency, capped at 8) with deterministic results.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pt/canonical.hpp"
#include "pt/constructions.hpp"
#include "pt/embedding.hpp"
#include "pt/graph6.hpp"
#include "pt/oracle.hpp"
#include "pt/patterns.hpp"
#include "pt/planarity.hpp"
#include "pt/search.hpp"
#include "pt/theta.hpp"

using namespace pt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

// criterion 9 runs over every embedding the other criteria touch
std::atomic<std::uint64_t> embeddings_audited{0};
std::atomic<std::uint64_t> identity_violations{0};

void audit_embedding(const PlaneEmbedding& emb) {
    ++embeddings_audited;
    auto fs = faces(emb);
    int total = 0;
    for (const auto& f : fs) total += f.length;
    bool ok = total == 2 * emb.graph.edge_count();
    if (connected_components(emb.graph).size() == 1)
        ok = ok && (emb.graph.n - emb.graph.edge_count() +
                        static_cast<int>(fs.size()) ==
                    2);
    if (!ok) ++identity_violations;
}

void report(int idx, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << idx << ": " << detail
              << std::endl;
    if (!ok) ++failures;
}

int jobs() {
    if (const char* env = std::getenv("PLANARTURAN_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1 ---------------------------------------------------------

void criterion_1() {
    auto t0 = Clock::now();
    CyclePattern p({3, 4});
    std::atomic<int> bad{0};
    std::atomic<int> next{20};
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs(); ++j)
        ts.emplace_back([&] {
            for (int n = next++; n <= 200; n = next++) {
                auto emb = matching_join(n);
                bool ok = emb.graph.edge_count() == (5 * n) / 2 - 4;
                ok = ok && is_planar(emb.graph);
                ok = ok && is_spherical(emb);
                ok = ok && is_pattern_free(emb.graph, p);
                if (!ok) ++bad;
            }
        });
    for (auto& t : ts) t.join();
    for (int n : {20, 50, 100, 200, 21, 151}) audit_embedding(matching_join(n));
    double el = secs_since(t0);
    std::ostringstream os;
    os << "matching_join(n), n in [20,200]: planar, C3+C4-free, "
          "floor(5n/2)-4 edges ("
       << el << " s)";
    report(1, bad == 0 && el < 10.0, os.str());
}

// ---- criterion 2 ---------------------------------------------------------

void criterion_2() {
    auto t0 = Clock::now();
    CyclePattern a({3, 4}), b({4, 4});
    std::atomic<std::uint64_t> mismatch{0};

    // all graphs with n <= 6
    std::uint64_t exhaustive = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::uint64_t total = 1ULL << pairs.size();
        exhaustive += total;
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> ts;
        for (int j = 0; j < jobs(); ++j)
            ts.emplace_back([&] {
                for (std::uint64_t m = next++; m < total; m = next++) {
                    std::vector<Edge> es;
                    for (std::size_t i = 0; i < pairs.size(); ++i)
                        if (m & (1ULL << i)) es.push_back(pairs[i]);
                    Graph g = build_graph(n, es);
                    bool da = !is_pattern_free(g, a);
                    bool db = !is_pattern_free(g, b);
                    if (da != naive_contains_disjoint_cycles(g, a)) ++mismatch;
                    if (db != naive_contains_disjoint_cycles(g, b)) ++mismatch;
                }
            });
        for (auto& t : ts) t.join();
    }

    // >= 1e5 seeded random planar graphs with 7 <= n <= 10
    const std::uint64_t samples = 100'000;
    const std::uint64_t seed = 0x5eed2024ULL;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> with_pattern{0};
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs(); ++j)
        ts.emplace_back([&] {
            for (std::uint64_t s = next++; s < samples; s = next++) {
                std::mt19937_64 rng(seed ^ (s * 0x9e3779b97f4a7c15ULL));
                int n = 7 + static_cast<int>(s % 4);
                Graph g = build_graph(n, {});
                std::uniform_int_distribution<int> pickv(0, n - 1);
                int attempts = std::uniform_int_distribution<int>(n, 4 * n)(rng);
                for (int at = 0; at < attempts; ++at) {
                    int u = pickv(rng), v = pickv(rng);
                    if (u == v || g.adjacent(u, v)) continue;
                    Graph h = add_edge(g, make_edge(u, v));
                    if (is_planar(h)) g = std::move(h);
                }
                bool da = !is_pattern_free(g, a);
                bool db = !is_pattern_free(g, b);
                if (da != naive_contains_disjoint_cycles(g, a)) ++mismatch;
                if (db != naive_contains_disjoint_cycles(g, b)) ++mismatch;
                if (da || db) ++with_pattern;
            }
        });
    for (auto& t : ts) t.join();

    std::ostringstream os;
    os << "detector vs subset oracle: " << exhaustive
       << " exhaustive graphs (n<=6) + " << samples
       << " random planar samples (7<=n<=10, " << with_pattern
       << " containing a pattern), patterns {3,4} and {4,4} (" << secs_since(t0)
       << " s)";
    report(2, mismatch == 0, os.str());
}

// ---- criterion 3 ---------------------------------------------------------

void criterion_3() {
    auto t0 = Clock::now();
    CyclePattern p({3, 4});
    bool ok = true;
    std::ostringstream os;

    auto d7 = planar_turan(7, p, jobs());
    auto n7 = planar_turan_naive(7, p, jobs());
    ok = ok && d7.max_edges == 14 && n7.max_edges == 14 &&
         d7.witnesses == n7.witnesses;
    os << "ex_P(7,{3,4})=" << d7.max_edges << " (naive agrees, "
       << d7.witness_count << " class); ";

    auto d8 = planar_turan(8, p, jobs());
    auto n8 = planar_turan_naive(8, p, jobs());
    ok = ok && d8.max_edges == 16 && n8.max_edges == 16 &&
         d8.witnesses == n8.witnesses;
    os << "ex_P(8,{3,4})=" << d8.max_edges << " (naive agrees over "
       << n8.graphs_examined << " labeled graphs, " << d8.witness_count
       << " classes); ";

    auto d9 = planar_turan(9, p, jobs());
    ok = ok && d9.max_edges == 18;
    // internal consistency: witnesses planar and free at the right level,
    // and every level above the maximum was exhausted without a free graph
    for (const auto& w : d9.witnesses) {
        Graph g = decode_graph6(w);
        bool wok = g.edge_count() == d9.max_edges && is_planar(g) &&
                   is_pattern_free(g, p);
        ok = ok && wok;
        audit_embedding(std::get<PlaneEmbedding>(test_planarity(g)));
    }
    std::uint64_t above = 0, above_free = 0;
    enumerate_planar(9, d9.max_edges + 1, [&](const Graph& g) {
        ++above;
        if (is_pattern_free(g, p)) ++above_free;
    });
    ok = ok && above_free == 0 && above > 0;
    os << "ex_P(9,{3,4})=" << d9.max_edges << " (engine only; " << above
       << " graphs above the level, none free) (" << secs_since(t0) << " s)";
    report(3, ok, os.str());
}

// ---- criterion 4 ---------------------------------------------------------

void criterion_4() {
    auto t0 = Clock::now();
    std::atomic<int> bad{0};
    std::atomic<int> next{8};
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs(); ++j)
        ts.emplace_back([&] {
            // every n in [8,201] is either even in [8,200] or odd in [9,201]
            for (int n = next++; n <= 201; n = next++) {
                auto emb = matching_join(n);
                if (static_cast<int>(interior_edges(emb).edges.size()) !=
                    n / 2 + 4)
                    ++bad;
            }
        });
    for (auto& t : ts) t.join();
    std::ostringstream os;
    os << "interior edges of matching_join(n) = floor(n/2)+4 for even n in "
          "[8,200] and odd n in [9,201] ("
       << secs_since(t0) << " s)";
    report(4, bad == 0, os.str());
}

// ---- criterion 5 ---------------------------------------------------------

void criterion_5() {
    auto t0 = Clock::now();
    CyclePattern p({3, 4});
    std::uint64_t corpus_size = 0, pairs_checked = 0;
    std::uint64_t intersection_violations = 0, unrecognized = 0;
    for (int n = 1; n <= 8; ++n) {
        std::vector<Graph> level;
        enumerate_planar(n, 0, [&](const Graph& g) { level.push_back(g); });
        std::atomic<std::size_t> next{0};
        std::atomic<std::uint64_t> corp{0}, pc{0}, iv{0}, un{0};
        std::vector<std::thread> ts;
        for (int j = 0; j < jobs(); ++j)
            ts.emplace_back([&] {
                for (std::size_t i = next++; i < level.size(); i = next++) {
                    const Graph& g = level[i];
                    if (!is_pattern_free(g, p)) continue;
                    ++corp;
                    auto emb = std::get<PlaneEmbedding>(test_planarity(g));
                    audit_embedding(emb);
                    auto ei = interior_edges(emb).edges;
                    for (std::size_t x = 0; x < ei.size(); ++x)
                        for (std::size_t y = x + 1; y < ei.size(); ++y) {
                            Edge e = ei[x], f = ei[y];
                            if (e.first == f.first || e.first == f.second ||
                                e.second == f.first || e.second == f.second)
                                continue;
                            ++pc;
                            auto ve = theta_graph(emb, e).vertices();
                            auto vf = theta_graph(emb, f).vertices();
                            std::vector<int> common;
                            std::set_intersection(ve.begin(), ve.end(),
                                                  vf.begin(), vf.end(),
                                                  std::back_inserter(common));
                            if (common.size() < 2) ++iv;
                            if (classify_pair(emb, e, f) == HClass::Unrecognized)
                                ++un;
                        }
                }
            });
        for (auto& t : ts) t.join();
        corpus_size += corp;
        pairs_checked += pc;
        intersection_violations += iv;
        unrecognized += un;
    }
    std::ostringstream os;
    os << "theta pair lemmas over " << corpus_size
       << " C3+C4-free planar graphs (n<=8), " << pairs_checked
       << " independent interior pairs: " << intersection_violations
       << " intersection violations, " << unrecognized << " unrecognized ("
       << secs_since(t0) << " s)";
    report(5, intersection_violations == 0 && unrecognized == 0, os.str());
}

// ---- criterion 6 ---------------------------------------------------------

void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream os;
    struct Case { int k, ell; bool k4rim; };
    std::vector<Case> cases{{4, 14, false}, {4, 14, true},  {4, 21, false},
                            {4, 21, true},  {5, 18, false}, {5, 27, false}};
    for (auto [k, ell, k4rim] : cases) {
        PatchSpec inner = triangle_patch();
        PatchSpec rim = k4rim ? k4_patch() : triangle_patch();
        auto emb = gk_family(k, ell, inner, rim);
        audit_embedding(emb);
        int q = ell / (2 * k - 1);
        int n1 = inner.emb.graph.n, n2 = rim.emb.graph.n;
        bool c = emb.graph.n == q * (n1 - 3) + ell * (n2 - 2) + 2;
        c = c && emb.graph.edge_count() == q * (3 * n1 - 6) + ell * (3 * n2 - 7);
        c = c && emb.graph.edge_count() == 3 * emb.graph.n - ell + 3 * q - 6;
        for (const auto& cyc : cycles_of_length(emb.graph, k))
            if (std::find(cyc.begin(), cyc.end(), 0) == cyc.end()) c = false;
        c = c && is_pattern_free(emb.graph, CyclePattern({k, k}));
        if (!c) ok = false;
        os << "G(" << k << "," << ell << (k4rim ? ";K4" : "") << "): n="
           << emb.graph.n << " e=" << emb.graph.edge_count() << "; ";
    }
    double el = secs_since(t0);
    os << "(" << el << " s)";
    report(6, ok && el < 60.0, os.str());
}

// ---- criterion 7 ---------------------------------------------------------

void criterion_7() {
    auto emb = g0(14);
    audit_embedding(emb);
    bool ok = emb.graph.n == 30 && emb.graph.edge_count() == 76;
    ok = ok && 7 * emb.graph.edge_count() == 19 * (emb.graph.n - 2);
    ok = ok && is_pattern_free(emb.graph, CyclePattern({4, 4}));
    report(7, ok, "g0(14): n=30, e=76=(19/7)(n-2), 2C4-free by the detector");
}

// ---- criterion 8 ---------------------------------------------------------

void criterion_8() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream os;
    for (int t = 0; t <= 2; ++t) {
        auto emb = stellated_triangulation(t);
        audit_embedding(emb);
        long long want = 1;
        for (int i = 0; i <= t; ++i) want *= 3;
        want = (want + 5) / 2;
        bool c = emb.graph.n == want;
        c = c && face_vector(emb) ==
                     std::map<int, int>{{3, 2 * emb.graph.n - 4}};
        c = c && vertex_connectivity_at_least(emb.graph, 3);
        auto circ = longest_cycle(emb.graph);
        c = c && circ.exact;
        double bound = 3.5 * std::pow(static_cast<double>(emb.graph.n),
                                      std::log(2.0) / std::log(3.0));
        c = c && circ.circumference < bound;
        if (t <= 1) c = c && circ.circumference == naive_circumference(emb.graph);
        if (!c) ok = false;
        os << "t=" << t << ": n=" << emb.graph.n << " circ="
           << circ.circumference << " < " << bound << "; ";
    }
    // end-to-end for chosen k values whose parameter lands at t <= 2
    {
        bool c = moon_moser_t(33) == 2 &&
                 longest_cycle(stellated_triangulation(2).graph).circumference < 33;
        c = c && moon_moser_t(20) == 1 &&
            longest_cycle(stellated_triangulation(1).graph).circumference < 20;
        if (!c) ok = false;
        os << "moon_moser_t(33)=2 and moon_moser_t(20)=1, circumferences "
              "below k; ";
    }
    // t=3 is best effort under a fixed node budget; reported, not gated
    {
        auto g = stellated_triangulation(3).graph;
        auto circ = longest_cycle(g, 20'000'000ULL);
        double bound =
            3.5 * std::pow(43.0, std::log(2.0) / std::log(3.0));
        os << "t=3 best-effort: circumference >= " << circ.circumference
           << (circ.exact ? " (exact)" : " (budget exhausted)") << ", bound "
           << bound << " (" << secs_since(t0) << " s)";
    }
    report(8, ok, os.str());
}

// ---- criterion 9 ---------------------------------------------------------

void criterion_9() {
    std::ostringstream os;
    os << "face handshake and Euler identity on " << embeddings_audited.load()
       << " embeddings produced above: " << identity_violations.load()
       << " violations";
    report(9, identity_violations == 0 && embeddings_audited > 0, os.str());
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << secs_since(t0) << " s total)" << std::endl;
    return failures;
}
