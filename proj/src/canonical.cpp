#include "pt/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "pt/graph6.hpp"

namespace pt {

namespace {

// Ordered partition as a list of cells; kept equitable between branchings.
struct Refiner {
    const Graph& g;

    explicit Refiner(const Graph& gr) : g(gr) {}

    // Splits cells by neighbor counts into worklist cells until stable.
    void refine(std::vector<std::vector<int>>& cells) const {
        std::vector<int> work(cells.size());
        std::iota(work.begin(), work.end(), 0);
        std::vector<char> in_work(cells.size(), 1);
        std::vector<int> count(g.n, 0);
        while (!work.empty()) {
            int wi = work.back();
            work.pop_back();
            if (wi >= static_cast<int>(cells.size())) continue;
            in_work[wi] = 0;
            std::vector<char> touched(g.n, 0);
            for (int v : cells[wi])
                for (int u : g.adj[v]) {
                    ++count[u];
                    touched[u] = 1;
                }
            std::size_t ncells = cells.size();
            for (std::size_t ci = 0; ci < ncells; ++ci) {
                auto& cell = cells[ci];
                if (cell.size() <= 1) continue;
                bool split = false;
                int c0 = count[cell[0]];
                for (int v : cell)
                    if (count[v] != c0) split = true;
                if (!split) continue;
                std::map<int, std::vector<int>> by_count;
                for (int v : cell) by_count[count[v]].push_back(v);
                auto it = by_count.begin();
                cell = it->second;
                ++it;
                for (; it != by_count.end(); ++it) {
                    cells.push_back(it->second);
                    in_work.push_back(1);
                    work.push_back(static_cast<int>(cells.size()) - 1);
                }
                if (!in_work[ci]) {
                    in_work[ci] = 1;
                    work.push_back(static_cast<int>(ci));
                }
            }
            for (int v = 0; v < g.n; ++v)
                if (touched[v]) count[v] = 0;
        }
        // the final cell order is isomorphism invariant: every split and
        // append derives only from neighbor counts and prior positions
    }
};

struct Searcher {
    const Graph& g;
    std::string best;                 // smallest certificate so far
    std::vector<int> best_labeling;   // old -> new
    std::string first;
    std::vector<int> first_labeling;
    std::vector<std::vector<int>> generators;
    std::vector<int> prefix;  // individualized vertices on current path
    Refiner refiner;

    explicit Searcher(const Graph& gr) : g(gr), refiner(gr) {}

    std::string certificate(const std::vector<int>& old_of_pos) const {
        std::string cert;
        cert.reserve(4 + (static_cast<std::size_t>(g.n) * g.n) / 8 + 1);
        cert.push_back(static_cast<char>((g.n >> 8) & 0xff));
        cert.push_back(static_cast<char>(g.n & 0xff));
        int acc = 0, nbits = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) {
                acc = (acc << 1) | (g.adjacent(old_of_pos[i], old_of_pos[j]) ? 1 : 0);
                if (++nbits == 8) {
                    cert.push_back(static_cast<char>(acc));
                    acc = nbits = 0;
                }
            }
        if (nbits) cert.push_back(static_cast<char>(acc << (8 - nbits)));
        return cert;
    }

    // orbit partition of the subgroup generated by generators fixing prefix
    std::vector<int> prefix_orbits() const {
        std::vector<int> uf(g.n);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int p : prefix)
                if (gen[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.n; ++v) {
                int a = find(v), b = find(gen[v]);
                if (a != b) uf[a] = b;
            }
        }
        for (int v = 0; v < g.n; ++v) uf[v] = find(v);
        return uf;
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> old_of_pos(g.n);
        for (std::size_t i = 0; i < cells.size(); ++i) old_of_pos[i] = cells[i][0];
        std::string cert = certificate(old_of_pos);
        auto as_labeling = [&] {
            std::vector<int> lab(g.n);
            for (int i = 0; i < g.n; ++i) lab[old_of_pos[i]] = i;
            return lab;
        };
        if (first.empty()) {
            first = cert;
            first_labeling = as_labeling();
        } else if (cert == first) {
            add_automorphism(first_labeling, as_labeling());
        }
        if (best.empty() || cert < best) {
            best = cert;
            best_labeling = as_labeling();
        } else if (cert == best) {
            add_automorphism(best_labeling, as_labeling());
        }
    }

    void add_automorphism(const std::vector<int>& lab1, const std::vector<int>& lab2) {
        // lab1 and lab2 produce equal certificates: gamma = lab1^{-1} . lab2
        std::vector<int> inv1(g.n);
        for (int v = 0; v < g.n; ++v) inv1[lab1[v]] = v;
        std::vector<int> gamma(g.n);
        for (int v = 0; v < g.n; ++v) gamma[v] = inv1[lab2[v]];
        bool identity = true;
        for (int v = 0; v < g.n; ++v)
            if (gamma[v] != v) identity = false;
        if (!identity) generators.push_back(std::move(gamma));
    }

    void search(std::vector<std::vector<int>> cells) {
        refiner.refine(cells);
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            // discrete: the refinement-produced cell order is the labeling
            leaf(cells);
            return;
        }
        std::vector<int> cand = cells[target];
        std::sort(cand.begin(), cand.end());
        std::vector<int> tried;
        for (int v : cand) {
            auto orb = prefix_orbits();
            bool skip = false;
            for (int u : tried)
                if (orb[u] == orb[v]) skip = true;
            if (skip) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
                if (i == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[i])
                        if (u != v) rest.push_back(u);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[i]);
                }
            }
            prefix.push_back(v);
            search(std::move(next));
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    if (g.n == 0) {
        CanonicalResult r;
        r.form = std::string("\0\0", 2);
        r.canonical_graph = g;
        return r;
    }
    Searcher s(g);
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    s.search({all});
    CanonicalResult r;
    r.form = s.best;
    r.labeling = s.best_labeling;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        es.push_back(make_edge(s.best_labeling[u], s.best_labeling[v]));
    r.canonical_graph = build_graph(g.n, es);
    r.automorphism_generators = s.generators;
    return r;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

std::string canonical_graph6(const Graph& g) {
    return encode_graph6(canonicalize(g).canonical_graph);
}

}  // namespace pt
