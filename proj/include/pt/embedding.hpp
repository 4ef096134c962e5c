#pragma once

#include <map>
#include <string>
#include <vector>

#include "pt/graph.hpp"

namespace pt {

// A fixed combinatorial plane drawing: clockwise neighbor order at every
// vertex plus a designated outer face. Faces are the orbits of the walk
// "next dart of (u,v) is (v, successor of u in rotation[v])"; every dart
// lies on exactly one face.
struct PlaneEmbedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    int outer_face = 0;
};

struct Face {
    int id = 0;
    std::vector<Edge> darts_raw;           // (from,to) in walk order
    std::vector<int> vertices;             // walk order, one entry per dart
    int length = 0;
    bool is_cycle = false;                 // boundary visits no vertex twice
};

// Faces in deterministic order (darts scanned by vertex, then rotation slot).
std::vector<Face> faces(const PlaneEmbedding& emb);

// Counts only faces whose boundary walk is a cycle, keyed by length.
std::map<int, int> face_vector(const PlaneEmbedding& emb);

// Throws std::invalid_argument if the rotation is not a neighbor
// permutation or the dart partition is broken.
void validate_embedding(const PlaneEmbedding& emb);

// True when every connected component satisfies v - e + f = 2 with faces
// computed from the rotation system (i.e. the rotation is genus 0).
bool is_spherical(const PlaneEmbedding& emb);

// Builds the embedding whose face set is exactly `oriented_faces` (vertex
// cycles; dart (f[i], f[i+1]) for each i, cyclically). Every dart must be
// used exactly once. `outer` selects the outer face by index into the list.
PlaneEmbedding embedding_from_oriented_faces(
    int n, const std::vector<std::vector<int>>& oriented_faces, int outer);

// Same, but face orientations are free: each walk may be flipped, and a
// consistent global orientation is solved for. Fails if none exists.
PlaneEmbedding embedding_from_faces(int n,
                                    const std::vector<std::vector<int>>& walks,
                                    int outer);

// Index (in faces(emb) order) of the face with this boundary vertex cycle,
// up to rotation/reflection; -1 if absent.
int find_face(const PlaneEmbedding& emb, const std::vector<int>& cycle);

std::string embedding_to_json(const PlaneEmbedding& emb);
PlaneEmbedding embedding_from_json(const std::string& text);

}  // namespace pt
