#include "pt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pt {

namespace {

// spanning cycles of g[subset], as permutations fixing subset[0]
long long count_spanning_cycles(const Graph& g, const std::vector<int>& subset) {
    int k = static_cast<int>(subset.size());
    if (k < 3) return 0;
    std::vector<int> perm(subset.begin() + 1, subset.end());
    std::sort(perm.begin(), perm.end());
    long long cnt = 0;
    do {
        if (perm[0] > perm.back()) continue;  // one direction only
        int prev = subset[0];
        bool ok = true;
        for (int v : perm) {
            if (!g.adjacent(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && g.adjacent(prev, subset[0])) ++cnt;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cnt;
}

bool subsets_rec(const Graph& g, const std::vector<int>& lengths, std::size_t idx,
                 std::vector<char>& used) {
    if (idx == lengths.size()) return true;
    int k = lengths[idx];
    std::vector<int> pool;
    for (int v = 0; v < g.n; ++v)
        if (!used[v]) pool.push_back(v);
    if (static_cast<int>(pool.size()) < k) return false;
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == k) {
            if (count_spanning_cycles(g, pick) == 0) return false;
            for (int v : pick) used[v] = 1;
            if (subsets_rec(g, lengths, idx + 1, used)) return true;
            for (int v : pick) used[v] = 0;
            return false;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            if (choose(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(0);
}

}  // namespace

bool naive_contains_disjoint_cycles(const Graph& g, const CyclePattern& p) {
    if (p.order() > g.n) return false;
    std::vector<char> used(g.n, 0);
    return subsets_rec(g, p.lengths, 0, used);
}

long long naive_count_cycles(const Graph& g, int k) {
    long long total = 0;
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            total += count_spanning_cycles(g, pick);
            return;
        }
        for (int v = from; v < g.n; ++v) {
            pick.push_back(v);
            choose(v + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return total;
}

int naive_circumference(const Graph& g) {
    for (int k = g.n; k >= 3; --k) {
        bool found = false;
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int from) {
            if (found) return;
            if (static_cast<int>(pick.size()) == k) {
                if (count_spanning_cycles(g, pick) > 0) found = true;
                return;
            }
            for (int v = from; v < g.n && !found; ++v) {
                pick.push_back(v);
                choose(v + 1);
                pick.pop_back();
            }
        };
        choose(0);
        if (found) return k;
    }
    return 0;
}

}  // namespace pt
