#ifndef WICKS_SURFACE_HPP
#define WICKS_SURFACE_HPP

#include <optional>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// Rotation system reconstructed from boundary words. Half-edges are the
// oriented letters (the set 2Q of size 2E); P is the vertex rotation, xi the
// fixed-point-free involution pairing x with x^{-1}. Cycles of P are the
// vertices, cycles of P*xi are the faces and read off the input words.
//
// Corner convention: all face words are read with the same orientation; the
// corner between consecutive boundary letters u,v lies at the vertex entered
// by u, so P(x) is the successor of x^{-1} in its face. This is locked by the
// face round-trip property below.
struct OrderedGraph {
    // half-edge index: 2*dense_id + (sign<0)
    int half_edges = 0;
    std::vector<int> rot;         // P
    std::vector<int> inv;         // xi
    std::vector<int> original_id; // dense id -> id in the source words

    std::vector<std::vector<int>> vertices; // cycles of P
    std::vector<int> vertex_of;             // half-edge -> vertex index
    int face_count = 0;

    // source words (faces), with ids replaced by dense ids
    MultiWord faces;

    int edge_count() const { return half_edges / 2; }
    int half_edge(Letter l) const { return 2 * l.id + (l.sign < 0 ? 1 : 0); }

    // endpoints of edge `id` (dense): vertex entered by the positive letter,
    // vertex entered by the negative letter
    std::pair<int, int> edge_endpoints(int id) const {
        return {vertex_of[static_cast<size_t>(2 * id)],
                vertex_of[static_cast<size_t>(2 * id + 1)]};
    }

    // read the cycles of P*xi back as face words (dense ids)
    MultiWord read_faces() const;

    bool cubic() const;
    bool connected() const;
};

struct SurfaceInvariants {
    int V = 0;
    int E = 0;
    int F = 0;
    int genus = 0;
    std::optional<int> k; // V/2 when V is even
    bool cubic = false;
};

// Builds the rotation system. Throws MalformedWord if some letter occurs != 2
// times across the faces, if the graph is disconnected, or (strict mode) if
// some vertex has degree < 3; OrientationError if a letter occurs twice with
// the same sign.
OrderedGraph build_ordered_graph(const MultiWord& m, bool strict = true);
OrderedGraph build_ordered_graph(const SignedWord& w, bool strict = true);

// V, E, F, genus from Euler's formula. Throws NonIntegerGenus when
// 2 - V + E - F is odd.
SurfaceInvariants invariants(const OrderedGraph& og);

// Genus of a single-face word, with the length-derived value 12g-6 checked
// against the Euler-derived one; the graph must be cubic. Throws GenusMismatch
// when they disagree (reducible or non-cubic word), MalformedWord /
// OrientationError on letter-usage violations.
int single_face_genus(const SignedWord& w);

} // namespace wicks

#endif
