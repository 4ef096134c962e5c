#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pt/embedding.hpp"
#include "pt/graph.hpp"

namespace pt {

// Edges lying on exactly two triangular faces of the fixed embedding, with
// distinct apexes (the two faces must span four vertices).
struct InteriorEdgeSet {
    std::vector<Edge> edges;  // sorted
};

InteriorEdgeSet interior_edges(const PlaneEmbedding& emb);

// Union of the two 3-faces flanking an interior edge: 4 vertices, 5 edges.
struct ThetaGraph {
    Edge base;
    std::array<int, 2> apexes;  // sorted
    std::array<int, 2> face_ids;

    std::vector<int> vertices() const;
    std::vector<Edge> edges() const;
};

// Throws std::invalid_argument (naming the incident face lengths) when the
// edge is not interior.
ThetaGraph theta_graph(const PlaneEmbedding& emb, Edge e);

// Configuration catalog for the union of two thetas over independent
// interior edges, plus its one-endpoint extensions. H6 is the degenerate
// union equal to K4 (all four triangles are faces, so the host component is
// K4 itself). Unrecognized is returned only when the union matches nothing,
// which for pairs can happen only in hosts containing a disjoint
// triangle+quadrilateral pair.
enum class HClass {
    H0, H1, H2, H3, H4, H5, H6,
    H01, H02, H03, H04, H05,
    H13, H31,
    Unrecognized,
};

std::string to_string(HClass c);

// Catalog entry: the reference graph and its face profile.
struct CatalogEntry {
    HClass cls;
    Graph graph;
    std::vector<std::array<int, 3>> member_triangles;
    std::vector<int> pseudo_face_lengths;  // sorted
};

const std::vector<CatalogEntry>& hclass_catalog();

// Classifies Theta_e union Theta_f as a plane subgraph. Pre: e, f are
// vertex-disjoint interior edges.
HClass classify_pair(const PlaneEmbedding& emb, Edge e, Edge f);

// Classify an arbitrary union of thetas (used for closure results).
HClass classify_theta_union(const PlaneEmbedding& emb,
                            const std::vector<ThetaGraph>& thetas);

// Faces of the plane subgraph formed by the union that are not 3-faces of
// any member theta.
std::vector<Face> pseudo_faces(const PlaneEmbedding& emb,
                               const std::vector<ThetaGraph>& thetas);

// Maximal generating graph grown from a class-minimal independent pair:
// each added theta's base edge meets the current vertex set in exactly one
// endpoint.
struct ClosureResult {
    bool hypothesis_met = false;
    std::string reason;  // set when the hypothesis fails

    Edge e_star{-1, -1}, f_star{-1, -1};
    int ell_star = -1;
    HClass h_star = HClass::Unrecognized;

    std::vector<Edge> closure_bases;   // bases added after the seed pair
    std::vector<int> hmax_vertices;    // sorted
    std::vector<Edge> hmax_edges;      // sorted
    HClass hmax_class = HClass::Unrecognized;
    std::vector<Edge> hat_hmax_edges;  // induced edge set on hmax_vertices
    std::vector<Edge> e_out;           // interior edges avoiding hmax_vertices
};

ClosureResult generating_closure(const PlaneEmbedding& emb);

// All H_max classes reachable under different extension orders. Order
// independence is not claimed anywhere; callers log this, never assert it.
std::set<HClass> closure_reachable_classes(const PlaneEmbedding& emb);

// Maximum matching size of the subgraph spanned by the interior edges.
int interior_matching_number(const PlaneEmbedding& emb);

// ---- lemma audit -------------------------------------------------------

struct LemmaRecord {
    enum class Status { Pass, Fail, NotApplicable };
    std::string graph6;
    std::string lemma;
    Status status;
    std::string witness_json;  // "" when absent
};

std::string to_string(LemmaRecord::Status s);

// Audits each embedding against the checkable statements:
//   theta-intersection : independent interior pairs share >= 2 vertices
//   theta-classification : pair unions classify into the catalog
//   face-count : if the interior-edge subgraph has matching number <= 1,
//                then |E_I| <= 9 or f3+f4 <= n-1
//   eout-matching : E_out is a matching (or empty, per the H_max class)
// A member containing a disjoint triangle+quadrilateral is rejected with a
// witness record ("corpus-freeness": Fail) and not audited further.
std::vector<LemmaRecord> lemma_audit(const std::vector<PlaneEmbedding>& corpus);

std::string lemma_record_to_json(const LemmaRecord& r);

}  // namespace pt
