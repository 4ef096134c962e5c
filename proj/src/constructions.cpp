#include "pt/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "pt/patterns.hpp"

namespace pt {

PlaneEmbedding matching_join(int n) {
    if (n < 4) throw std::invalid_argument("matching_join: n must be >= 4");
    int k = (n - 2) / 2;          // number of kites
    bool odd = (n % 2) != 0;
    int star = odd ? n - 1 : -1;  // leftover vertex
    auto u = [](int i) { return 2 * i; };      // i in 1..k
    auto v = [](int i) { return 2 * i + 1; };
    const int r = 0, rp = 1;

    std::vector<std::vector<int>> walks;
    for (int i = 1; i <= k; ++i) {
        walks.push_back({r, u(i), v(i)});    // kite top
        walks.push_back({rp, u(i), v(i)});   // kite bottom
    }
    for (int i = 1; i + 1 <= k; ++i) {
        if (odd && i == 1 && k >= 2) {
            // leftover vertex sits in the first kite-to-kite gap
            walks.push_back({r, v(1), rp, star});
            walks.push_back({r, star, rp, u(2)});
        } else {
            walks.push_back({r, v(i), rp, u(i + 1)});
        }
    }
    // the wrap gap holds the pole edge rr'
    if (odd && k == 1) {
        // n == 5: no kite-to-kite gap exists; split the vk-side triangle
        walks.push_back({r, v(k), rp, star});
        walks.push_back({r, star, rp});
        walks.push_back({r, rp, u(1)});
    } else {
        walks.push_back({r, v(k), rp});
        walks.push_back({r, rp, u(1)});
    }
    int outer = static_cast<int>(walks.size()) - 1;
    return embedding_from_faces(n, walks, outer);
}

PlaneEmbedding stellated_triangulation(int t) {
    if (t < 0) throw std::invalid_argument("stellated_triangulation: t < 0");
    // K4: outer face (0,1,2), center 3
    std::vector<std::vector<int>> internal = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
    std::vector<int> outer_face = {0, 1, 2};
    int n = 4;
    for (int round = 0; round < t; ++round) {
        std::vector<std::vector<int>> next;
        for (const auto& f : internal) {
            int w = n++;
            next.push_back({f[0], f[1], w});
            next.push_back({f[1], f[2], w});
            next.push_back({f[0], f[2], w});
        }
        internal = std::move(next);
    }
    auto walks = internal;
    walks.push_back(outer_face);
    return embedding_from_faces(n, walks, static_cast<int>(walks.size()) - 1);
}

void FamilyParams::validate() const {
    if (k < 4) throw std::invalid_argument("family: k must be >= 4");
    if (ell < 2 * k) throw std::invalid_argument("family: ell must be >= 2k");
    if (!allow_remainder && ell % (2 * k - 1) != 0)
        throw std::invalid_argument("family: (2k-1) must divide ell");
}

PlaneEmbedding wheel_scaffold(const FamilyParams& p) {
    p.validate();
    const int hub = 0, apex = 1;
    auto x = [](int i) { return 1 + i; };  // rim, 1-based
    int ell = p.ell, q = p.chord_count();

    std::vector<std::vector<int>> walks;
    for (int j = 1; j <= ell; ++j)
        walks.push_back({hub, x(j), x(j % ell + 1)});  // S_j
    std::vector<int> m(q + 1), nn(q + 1);
    for (int i = 1; i <= q; ++i) {
        m[i] = (2 * p.k - 1) * (i - 1) + 1;
        nn[i] = m[i] + p.k;
        walks.push_back({apex, x(m[i]), x(nn[i])});  // T_i
        std::vector<int> chord_face;
        for (int j = m[i]; j <= nn[i]; ++j) chord_face.push_back(x(j));
        walks.push_back(std::move(chord_face));  // closed by the chord
    }
    for (int i = 1; i <= q; ++i) {
        // gap between T_i and T_{i+1} (wrapping), bounded by two apex edges
        std::vector<int> gap{apex};
        int from = nn[i], to = (i < q) ? m[i + 1] : m[1] + ell;
        for (int j = from; j <= to; ++j) gap.push_back(x((j - 1) % ell + 1));
        walks.push_back(std::move(gap));
    }
    int outer = static_cast<int>(walks.size()) - 1;  // the wrap gap face
    return embedding_from_faces(ell + 2, walks, outer);
}

namespace {

// face whose oriented walk is cyclically equal to the given triple
int find_face_by_walk(const PlaneEmbedding& emb, const std::array<int, 3>& walk) {
    for (const auto& f : faces(emb)) {
        if (f.length != 3 || !f.is_cycle) continue;
        for (int r = 0; r < 3; ++r)
            if (f.vertices[r] == walk[0] && f.vertices[(r + 1) % 3] == walk[1] &&
                f.vertices[(r + 2) % 3] == walk[2])
                return f.id;
    }
    return -1;
}

// The boundary is an oriented walk: fix it from the actual face so the
// gluing orientation is well defined even for the symmetric triangle.
std::array<int, 3> boundary_walk_of(const PlaneEmbedding& emb,
                                    const std::vector<int>& corners) {
    int id = find_face(emb, corners);
    if (id < 0) throw std::logic_error("patch boundary face missing");
    const auto fs = faces(emb);
    const Face& f = fs[id];
    return {f.vertices[0], f.vertices[1], f.vertices[2]};
}

}  // namespace

PatchSpec triangle_patch() {
    PatchSpec p;
    p.emb = embedding_from_oriented_faces(3, {{0, 1, 2}, {2, 1, 0}}, 1);
    p.boundary = {0, 1, 2};  // walk of face 0; the other face survives gluing
    p.name = "triangle";
    return p;
}

PatchSpec k4_patch() {
    PatchSpec p;
    p.emb = embedding_from_faces(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 2}}, 3);
    p.boundary = boundary_walk_of(p.emb, {0, 1, 2});
    p.special_vertex = 0;
    p.name = "k4";
    return p;
}

PatchSpec stellated_patch(int t) {
    PatchSpec p;
    p.emb = stellated_triangulation(t);
    p.boundary = boundary_walk_of(p.emb, {0, 1, 2});  // the outer face
    p.special_vertex = std::nullopt;
    p.name = "stellated-" + std::to_string(t);
    return p;
}

EligibilityResult patch_eligibility(const PatchSpec& patch, PatchRole role, int k) {
    EligibilityResult r;
    for (const auto& f : faces(patch.emb))
        if (!(f.is_cycle && f.length == 3)) {
            r.eligible = false;
            r.reason = "patch is not a triangulation";
            return r;
        }
    if (find_face_by_walk(patch.emb, patch.boundary) < 0) {
        r.eligible = false;
        r.reason = "boundary triple is not an oriented face walk";
        return r;
    }
    const Graph& g = patch.emb.graph;
    auto circ = longest_cycle(g);
    int limit = role == PatchRole::Inner ? k - 1 : k;
    if (circ.circumference > limit) {
        r.eligible = false;
        r.reason = "circumference " + std::to_string(circ.circumference) +
                   " exceeds " + std::to_string(limit);
        for (const auto& c : cycles_of_length(g, circ.circumference)) {
            r.offending_cycle = c;
            break;
        }
        return r;
    }
    if (role == PatchRole::Rim && circ.circumference == k) {
        if (!patch.special_vertex) {
            r.eligible = false;
            r.reason = "k-cycles present but no special vertex designated";
            return r;
        }
        int sv = *patch.special_vertex;
        if (std::find(patch.boundary.begin(), patch.boundary.end(), sv) ==
            patch.boundary.end()) {
            r.eligible = false;
            r.reason = "special vertex must lie on the boundary face";
            return r;
        }
        for (const auto& c : cycles_of_length(g, k))
            if (std::find(c.begin(), c.end(), sv) == c.end()) {
                r.eligible = false;
                r.reason = "a k-cycle avoids the special vertex";
                r.offending_cycle = c;
                return r;
            }
    }
    return r;
}

PlaneEmbedding replace_face(const PlaneEmbedding& host, int face_id,
                            const PatchSpec& patch,
                            const std::array<int, 3>& patch_triple,
                            const std::array<int, 3>& host_triple) {
    auto host_faces = faces(host);
    if (face_id < 0 || face_id >= static_cast<int>(host_faces.size()))
        throw std::invalid_argument("replace_face: no such face");
    const Face& target = host_faces[face_id];
    if (!(target.is_cycle && target.length == 3))
        throw std::invalid_argument("replace_face: target face is not a 3-face");

    // correspondence patch vertex -> host vertex
    std::map<int, int> mu;
    for (int i = 0; i < 3; ++i) mu[patch_triple[i]] = host_triple[i];
    {
        std::vector<int> pt(patch_triple.begin(), patch_triple.end());
        std::vector<int> pb(patch.boundary.begin(), patch.boundary.end());
        std::sort(pt.begin(), pt.end());
        std::sort(pb.begin(), pb.end());
        if (pt != pb)
            throw std::invalid_argument("replace_face: triple is not the boundary");
        std::vector<int> ht(host_triple.begin(), host_triple.end());
        std::vector<int> hv = target.vertices;
        std::sort(ht.begin(), ht.end());
        std::sort(hv.begin(), hv.end());
        if (ht != hv)
            throw std::invalid_argument("replace_face: triple is not the face");
    }

    auto patch_faces = faces(patch.emb);
    int bid = find_face_by_walk(patch.emb, patch.boundary);
    if (bid < 0)
        throw std::invalid_argument("replace_face: patch boundary is not a face");

    // orientation: mu must send the patch boundary walk onto the reverse of
    // the host face walk (the patch is glued into the face region)
    {
        const Face& pb = patch_faces[bid];
        std::vector<int> mapped;
        for (int v : pb.vertices) mapped.push_back(mu.at(v));
        std::vector<int> hostrev(target.vertices.rbegin(), target.vertices.rend());
        bool ok = false;
        for (int r = 0; r < 3 && !ok; ++r) {
            std::rotate(mapped.begin(), mapped.begin() + 1, mapped.end());
            if (mapped == hostrev) ok = true;
        }
        if (!ok)
            throw std::invalid_argument(
                "replace_face: correspondence reverses orientation");
    }

    // fresh ids for patch interior vertices
    int next_id = host.graph.n;
    std::map<int, int> rename = mu;
    for (int v = 0; v < patch.emb.graph.n; ++v)
        if (!rename.count(v)) rename[v] = next_id++;

    std::vector<std::vector<int>> walks;
    for (const auto& f : host_faces) {
        if (f.id == face_id) continue;
        std::vector<int> w;
        for (auto [a, b] : f.darts_raw) {
            w.push_back(a);
            (void)b;
        }
        walks.push_back(std::move(w));
    }
    int host_outer_pos = -1;
    if (host.outer_face != face_id) {
        int pos = 0;
        for (const auto& f : host_faces) {
            if (f.id == face_id) continue;
            if (f.id == host.outer_face) host_outer_pos = pos;
            ++pos;
        }
    }
    int first_patch_pos = static_cast<int>(walks.size());
    for (const auto& f : patch_faces) {
        if (f.id == bid) continue;
        std::vector<int> w;
        for (auto [a, b] : f.darts_raw) {
            w.push_back(rename.at(a));
            (void)b;
        }
        walks.push_back(std::move(w));
    }
    int outer = host_outer_pos >= 0 ? host_outer_pos : first_patch_pos;
    return embedding_from_oriented_faces(next_id, walks, outer);
}

namespace {

// locate a face by corner set and return (id, oriented walk)
int face_by_corners(const PlaneEmbedding& emb, std::vector<int> corners) {
    return find_face(emb, corners);
}

// glue `patch` into the 3-face with the given corners; `anchor` (patch
// vertex, host vertex) forces one identification, the rest follows from
// orientation
PlaneEmbedding glue(const PlaneEmbedding& host, const std::vector<int>& corners,
                    const PatchSpec& patch,
                    std::optional<std::pair<int, int>> anchor) {
    int fid = face_by_corners(host, corners);
    if (fid < 0) throw std::logic_error("glue: face not found");
    auto host_faces = faces(host);
    const Face& target = host_faces[fid];
    std::vector<int> hostrev(target.vertices.rbegin(), target.vertices.rend());
    // try the three rotations of the patch boundary against hostrev
    auto patch_faces = faces(patch.emb);
    int bid = find_face_by_walk(patch.emb, patch.boundary);
    if (bid < 0) throw std::logic_error("glue: patch boundary walk missing");
    const Face& pb = patch_faces[bid];
    for (int r = 0; r < 3; ++r) {
        std::array<int, 3> pt{pb.vertices[r % 3], pb.vertices[(r + 1) % 3],
                              pb.vertices[(r + 2) % 3]};
        std::array<int, 3> ht{hostrev[0], hostrev[1], hostrev[2]};
        if (anchor) {
            bool hit = false;
            for (int i = 0; i < 3; ++i)
                if (pt[i] == anchor->first && ht[i] == anchor->second) hit = true;
            if (!hit) continue;
        }
        return replace_face(host, fid, patch, pt, ht);
    }
    throw std::invalid_argument(
        "glue: special vertex cannot be identified with the hub");
}

}  // namespace

PlaneEmbedding gk_family(int k, int ell, const PatchSpec& inner,
                         const PatchSpec& rim, bool allow_remainder) {
    FamilyParams p{k, ell, allow_remainder};
    p.validate();
    auto ir = patch_eligibility(inner, PatchRole::Inner, k);
    if (!ir.eligible)
        throw std::invalid_argument("gk_family: inner patch ineligible: " +
                                    ir.reason);
    auto rr = patch_eligibility(rim, PatchRole::Rim, k);
    if (!rr.eligible)
        throw std::invalid_argument("gk_family: rim patch ineligible: " + rr.reason);

    PlaneEmbedding g = wheel_scaffold(p);
    const int hub = 0, apex = 1;
    auto x = [](int i) { return 1 + i; };
    int q = p.chord_count();

    // chord triangles first (corner sets never collide with hub triangles)
    for (int i = 1; i <= q; ++i) {
        int mi = (2 * k - 1) * (i - 1) + 1, ni = mi + k;
        g = glue(g, {apex, x(mi), x(ni)}, inner, std::nullopt);
    }
    for (int j = 1; j <= ell; ++j) {
        std::optional<std::pair<int, int>> anchor;
        if (rim.special_vertex) anchor = {*rim.special_vertex, hub};
        g = glue(g, {hub, x(j), x(j % ell + 1)}, rim, anchor);
    }
    return g;
}

PlaneEmbedding g0(int ell) {
    if (ell < 8 || ell % 7 != 0)
        throw std::invalid_argument("g0: ell must be >= 8 and divisible by 7");
    return gk_family(4, ell, triangle_patch(), k4_patch());
}

long long moon_moser_t(int k) {
    long double arg =
        2.0L * std::pow(2.0L * k / 7.0L, std::log2(3.0L)) - 5.0L;
    if (arg <= 0)
        throw std::domain_error("moon_moser_t: k too small for this formula");
    long double t = std::log(arg) / std::log(3.0L);
    return static_cast<long long>(std::floor(t)) - 1;
}

}  // namespace pt
