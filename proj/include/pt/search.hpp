#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pt/graph.hpp"
#include "pt/patterns.hpp"

namespace pt {

// Enumeration is exact but deliberately desk-scale.
constexpr int kMaxEnumerationN = 10;

// All maximal planar graphs (triangulations for n >= 3) on n vertices, one
// per isomorphism class, generated by diagonal-flip closure from a stacked
// triangulation. Flip connectivity of the triangulations of a fixed sphere
// makes this exhaustive.
std::vector<Graph> triangulations(int n);

// One representative per isomorphism class of planar graphs on n vertices
// with at least min_edges edges, streamed level by level from 3n-6 edges
// downward (each level is the canonical-dedup closure of single-edge
// deletions from the level above). Deterministic order.
void enumerate_planar(int n, int min_edges,
                      const std::function<void(const Graph&)>& visit);

struct SearchReport {
    int n = 0;
    std::vector<int> pattern;
    int max_edges = 0;
    std::vector<std::string> witnesses;  // canonical graph6, sorted
    std::uint64_t witness_count = 0;     // may exceed the stored cap
    std::uint64_t graphs_examined = 0;
    double seconds = 0.0;
    std::string engine;
};

constexpr std::uint64_t kWitnessCap = 10'000;

// Exact planar Turan value by descending edge levels; stops at the first
// level containing a pattern-free graph. Witness list is complete up to
// isomorphism (capped in storage, exact in count).
SearchReport planar_turan(int n, const CyclePattern& p, int jobs = 1);

// Slow oracle: scans every labeled graph level by level (descending),
// keeping planar ones and testing freeness by the naive subset oracle.
SearchReport planar_turan_naive(int n, const CyclePattern& p, int jobs = 1);

struct FormulaComparison {
    int n;
    long long searched;
    long long formula;
    int relation;  // -1 searched<formula, 0 equal, +1 searched>formula
};

std::vector<FormulaComparison> verify_formula(
    int n_lo, int n_hi, const CyclePattern& p,
    const std::function<long long(int)>& formula, int jobs = 1);

std::string report_to_json(const SearchReport& r);
std::string report_to_csv_row(const SearchReport& r);

}  // namespace pt
