#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pt/embedding.hpp"
#include "pt/graph.hpp"

namespace pt {

// Perfect matching on n-2 vertices fully joined to an edge {r, r'}; for odd
// n the leftover vertex is adjacent to exactly {r, r'}. Vertex layout:
// r=0, r'=1, pairs (2i, 2i+1), leftover last. Edge count floor(5n/2)-4.
// The pinned drawing fans the kites around the pole axis with rr' drawn in
// the gap between the last and first kite; the odd leftover sits in a
// kite-to-kite gap so the interior-edge count is floor(n/2)+4.
PlaneEmbedding matching_join(int n);

// Iterated stellation of K4: t rounds of inserting one vertex into every
// internal face, joined to the three corners. Order (3^{t+1}+5)/2; a
// 3-connected triangulation.
PlaneEmbedding stellated_triangulation(int t);

struct FamilyParams {
    int k = 4;    // forbidden cycle length, >= 4
    int ell = 0;  // rim length, >= 2k
    bool allow_remainder = false;  // permit (2k-1) not dividing ell

    void validate() const;  // throws std::invalid_argument
    int chord_count() const { return ell / (2 * k - 1); }
};

// Hub u joined to a rim cycle x_1..x_ell, plus an outer apex v with chords
// x_{m_i} x_{n_i} (m_i = (2k-1)(i-1)+1, n_i = m_i + k, 1-based on the rim).
// Vertices: u=0, v=1, x_i=1+i. All faces are 3-faces or (k+1)-faces, with
// one longer face when a remainder arc is allowed.
PlaneEmbedding wheel_scaffold(const FamilyParams& p);

// A triangulation patch: a plane triangulation together with a boundary
// face (the triple glued onto a host face) and an optional special vertex.
struct PatchSpec {
    PlaneEmbedding emb;
    std::array<int, 3> boundary{0, 1, 2};
    std::optional<int> special_vertex;
    std::string name = "patch";
};

PatchSpec triangle_patch();
PatchSpec k4_patch();
PatchSpec stellated_patch(int t);

struct EligibilityResult {
    bool eligible = true;
    std::string reason;
    std::vector<int> offending_cycle;
};

enum class PatchRole { Inner, Rim };  // chord-triangle patch vs rim patch

// Inner role: circumference <= k-1. Rim role: circumference <= k, and when
// k-cycles exist they all pass through the special vertex (which must lie
// on the boundary so it can be glued onto the hub).
EligibilityResult patch_eligibility(const PatchSpec& patch, PatchRole role, int k);

// Glues the patch into a triangular face: patch boundary vertices are
// identified with the face corners via the given correspondence (which
// must respect the cyclic orientation), interior vertices get fresh ids.
PlaneEmbedding replace_face(const PlaneEmbedding& host, int face_id,
                            const PatchSpec& patch,
                            const std::array<int, 3>& patch_triple,
                            const std::array<int, 3>& host_triple);

// Wheel scaffold with every chord triangle replaced by `inner` and every
// hub triangle replaced by `rim` (special vertex glued onto the hub).
PlaneEmbedding gk_family(int k, int ell, const PatchSpec& inner,
                         const PatchSpec& rim, bool allow_remainder = false);

// gk_family(4, ell, triangle, K4): e = (19/7)(n-2) when 7 | ell.
PlaneEmbedding g0(int ell);

// t = floor(log3(2 (2k/7)^{log2 3} - 5)) - 1; throws std::domain_error when
// the logarithm argument is nonpositive ("k too small"). The returned t is
// a candidate only: callers verify the circumference bound downstream.
long long moon_moser_t(int k);

}  // namespace pt
