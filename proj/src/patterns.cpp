#include "pt/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace pt {

CyclePattern::CyclePattern(std::vector<int> ls) : lengths(std::move(ls)) {
    for (int l : lengths)
        if (l < 3) throw std::invalid_argument("cycle pattern length < 3");
    std::sort(lengths.begin(), lengths.end());
}

int CyclePattern::order() const {
    int s = 0;
    for (int l : lengths) s += l;
    return s;
}

namespace {

// Enumerates cycles of length k avoiding `banned`, invoking cb; cb returns
// true to stop early. Cycles are canonical: path[0] is the minimum vertex
// and path[1] < path[k-1].
bool for_each_cycle(const Graph& g, int k, const std::vector<char>& banned,
                    const std::function<bool(const std::vector<int>&)>& cb) {
    if (k == 4) {
        // collect the centers over every diagonal pair (cost sum of deg^2);
        // a 4-cycle w1-x-w2-y is emitted from the diagonal holding its
        // minimum vertex, with x < y. The callback may reenter this
        // enumerator on the residual graph, so stamped buffers are pooled
        // per nesting depth (and kept across calls to avoid allocation).
        const int n = g.n;
        struct Bufs {
            std::vector<int> stamp, slot_of, keys;
            std::vector<std::vector<int>> lists;
            int gen = 0;
        };
        thread_local std::vector<std::unique_ptr<Bufs>> pool;
        thread_local std::size_t depth = 0;
        if (pool.size() <= depth) pool.push_back(std::make_unique<Bufs>());
        Bufs& B = *pool[depth];
        struct Guard {
            std::size_t& d;
            explicit Guard(std::size_t& dd) : d(dd) { ++d; }
            ~Guard() { --d; }
        } guard(depth);
        if (static_cast<int>(B.stamp.size()) < n * n) {
            B.stamp.assign(static_cast<std::size_t>(n) * n, -1);
            B.slot_of.assign(static_cast<std::size_t>(n) * n, 0);
            B.gen = 0;
        }
        ++B.gen;
        B.keys.clear();
        std::size_t used = 0;
        for (int u = 0; u < n; ++u) {
            if (banned[u]) continue;
            const auto& nb = g.adj[u];
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (banned[nb[i]]) continue;
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    if (banned[nb[j]]) continue;
                    int key = nb[i] * n + nb[j];
                    if (B.stamp[key] != B.gen) {
                        B.stamp[key] = B.gen;
                        if (B.lists.size() <= used) B.lists.emplace_back();
                        B.lists[used].clear();
                        B.slot_of[key] = static_cast<int>(used);
                        B.keys.push_back(key);
                        ++used;
                    }
                    B.lists[B.slot_of[key]].push_back(u);
                }
            }
        }
        for (std::size_t s = 0; s < used; ++s) {
            int w1 = B.keys[s] / n, w2 = B.keys[s] % n;
            const auto& cs = B.lists[s];
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (cs[i] < w1) continue;
                for (std::size_t j = i + 1; j < cs.size(); ++j) {
                    std::vector<int> c{w1, cs[i], w2, cs[j]};
                    if (c[1] > c[3]) std::swap(c[1], c[3]);
                    if (cb(c)) return true;
                }
            }
        }
        return false;
    }
    std::vector<int> path;
    std::vector<char> used(g.n, 0);
    std::function<bool(int)> dfs = [&](int start) -> bool {
        int u = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (g.adjacent(u, start) && path[1] < path[k - 1]) return cb(path);
            return false;
        }
        for (int w : g.adj[u]) {
            if (w <= start || used[w] || banned[w]) continue;
            // reflection dedup handled at closure; depth bound below
            used[w] = 1;
            path.push_back(w);
            if (dfs(start)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (int s = 0; s < g.n; ++s) {
        if (banned[s]) continue;
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (dfs(s)) return true;
    }
    return false;
}

bool find_rec(const Graph& g, const std::vector<int>& lengths, std::size_t idx,
              std::vector<char>& banned, std::vector<std::vector<int>>& acc) {
    if (idx == lengths.size()) return true;
    bool found = false;
    for_each_cycle(g, lengths[idx], banned, [&](const std::vector<int>& c) {
        for (int v : c) banned[v] = 1;
        acc.push_back(c);
        if (find_rec(g, lengths, idx + 1, banned, acc)) {
            found = true;
        } else {
            acc.pop_back();
        }
        if (!found)
            for (int v : c) banned[v] = 0;
        return found;
    });
    return found;
}

}  // namespace

std::optional<PatternWitness> find_disjoint_cycles(const Graph& g,
                                                   const CyclePattern& p) {
    if (p.order() > g.n) return std::nullopt;
    std::vector<char> banned(g.n, 0);
    std::vector<std::vector<int>> acc;
    if (find_rec(g, p.lengths, 0, banned, acc)) {
        PatternWitness w;
        w.cycles = std::move(acc);
        return w;
    }
    return std::nullopt;
}

bool is_pattern_free(const Graph& g, const CyclePattern& p) {
    return !find_disjoint_cycles(g, p).has_value();
}

bool validate_witness(const Graph& g, const CyclePattern& p,
                      const PatternWitness& w) {
    if (w.cycles.size() != p.lengths.size()) return false;
    std::multiset<int> want(p.lengths.begin(), p.lengths.end());
    std::multiset<int> have;
    std::set<int> used;
    for (const auto& c : w.cycles) {
        have.insert(static_cast<int>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            int u = c[i], v = c[(i + 1) % c.size()];
            if (u < 0 || u >= g.n || !g.adjacent(u, v)) return false;
            if (!used.insert(u).second) return false;
        }
    }
    return want == have;
}

std::vector<std::vector<int>> cycles_of_length(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycles_of_length: k < 3");
    std::vector<std::vector<int>> out;
    std::vector<char> banned(g.n, 0);
    for_each_cycle(g, k, banned, [&](const std::vector<int>& c) {
        out.push_back(c);
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// vertices reachable from `from` avoiding `blocked`; also reports whether
// any scanned neighbor equals `target` (even if target itself is blocked)
int reachable_count(const Graph& g, int from, const std::vector<char>& blocked,
                    std::vector<int>& scratch, std::vector<int>& stamp, int tick,
                    int target, bool* target_hit) {
    scratch.clear();
    scratch.push_back(from);
    stamp[from] = tick;
    int cnt = 0;
    *target_hit = false;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        int u = scratch[i];
        for (int w : g.adj[u]) {
            if (w == target) *target_hit = true;
            if (stamp[w] == tick || blocked[w]) continue;
            stamp[w] = tick;
            ++cnt;
            scratch.push_back(w);
        }
    }
    return cnt;
}

}  // namespace

CircumferenceResult longest_cycle(const Graph& g, std::uint64_t node_budget) {
    CircumferenceResult res;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::vector<int> scratch, stamp(g.n, -1);
    int tick = 0;
    bool aborted = false;

    std::function<void(int)> dfs = [&](int start) {
        if (aborted) return;
        if (++res.nodes > node_budget) {
            aborted = true;
            return;
        }
        int u = path.back();
        int len = static_cast<int>(path.size());
        if (len >= 3 && g.adjacent(u, start))
            res.circumference = std::max(res.circumference, len);
        // bound: current path + everything reachable from u off the path;
        // the cycle must also close back to start
        bool start_hit = false;
        ++tick;
        int extra = reachable_count(g, u, on_path, scratch, stamp, tick, start,
                                    &start_hit);
        if (len >= 2 && !start_hit) return;  // start unreachable: nothing closes
        if (len + extra <= res.circumference) return;
        for (int w : g.adj[u]) {
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(start);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < g.n && !aborted; ++s) {
        if (g.n - s <= res.circumference) break;  // cycles in {s..n-1} too short
        path = {s};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        // vertices below s are excluded: emulate by marking them on_path
        for (int v = 0; v < s; ++v) on_path[v] = 1;
        dfs(s);
    }
    res.exact = !aborted;
    return res;
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k > g.n - 1) throw std::invalid_argument("connectivity: k > n-1");
    if (k <= 0) return true;

    auto connected_avoiding = [&](const std::vector<int>& cut) {
        std::vector<char> blocked(g.n, 0);
        for (int v : cut) blocked[v] = 1;
        int start = -1, left = 0;
        for (int v = 0; v < g.n; ++v)
            if (!blocked[v]) {
                if (start < 0) start = v;
                ++left;
            }
        if (left <= 1) return true;
        std::vector<int> stack{start};
        std::vector<char> seen(g.n, 0);
        seen[start] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (!blocked[w] && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == left;
    };

    // all cuts of size < k
    std::vector<int> cut;
    std::function<bool(int, int)> rec = [&](int from, int remain) -> bool {
        if (!connected_avoiding(cut)) return false;
        if (remain == 0) return true;
        for (int v = from; v < g.n; ++v) {
            cut.push_back(v);
            bool ok = rec(v + 1, remain - 1);
            cut.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0, k - 1);
}

}  // namespace pt
