#include "wicks/surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace wicks {

MultiWord OrderedGraph::read_faces() const {
    // cycles of P*xi, each started at the smallest unvisited half-edge
    MultiWord out;
    std::vector<char> seen(static_cast<size_t>(half_edges), 0);
    for (int start = 0; start < half_edges; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        SignedWord face;
        int x = start;
        do {
            seen[static_cast<size_t>(x)] = 1;
            face.letters.push_back(Letter{x / 2, x % 2 ? -1 : +1});
            x = rot[static_cast<size_t>(inv[static_cast<size_t>(x)])];
        } while (x != start);
        out.faces.push_back(std::move(face));
    }
    return out;
}

bool OrderedGraph::cubic() const {
    for (const auto& v : vertices)
        if (v.size() != 3) return false;
    return !vertices.empty();
}

bool OrderedGraph::connected() const {
    if (half_edges == 0) return false;
    std::vector<char> seen(static_cast<size_t>(half_edges), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {rot[static_cast<size_t>(x)], inv[static_cast<size_t>(x)]}) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++visited;
                stack.push_back(y);
            }
        }
    }
    return visited == half_edges;
}

OrderedGraph build_ordered_graph(const MultiWord& m, bool strict) {
    OrderedGraph og;

    // dense ids by first occurrence; usage counts per id and sign
    std::map<int, int> dense;
    std::vector<std::array<int, 2>> counts; // [dense id][sign<0]
    MultiWord faces = m;
    for (SignedWord& f : faces.faces) {
        for (Letter& l : f.letters) {
            auto [it, inserted] = dense.try_emplace(l.id, static_cast<int>(og.original_id.size()));
            if (inserted) {
                og.original_id.push_back(l.id);
                counts.push_back({0, 0});
            }
            l.id = it->second;
            ++counts[static_cast<size_t>(l.id)][l.sign < 0 ? 1 : 0];
        }
    }
    if (og.original_id.empty()) throw MalformedWord("empty word");

    for (size_t id = 0; id < counts.size(); ++id) {
        int total = counts[id][0] + counts[id][1];
        if (total != 2)
            throw MalformedWord("letter id " + std::to_string(og.original_id[id]) +
                                " occurs " + std::to_string(total) + " times, expected 2");
        if (counts[id][0] != 1)
            throw OrientationError("letter id " + std::to_string(og.original_id[id]) +
                                       " occurs twice with the same sign",
                                   og.original_id[id]);
    }

    int e = static_cast<int>(counts.size());
    og.half_edges = 2 * e;
    og.faces = faces;

    // successor within each face; every half-edge occurs exactly once overall
    std::vector<int> succ(static_cast<size_t>(og.half_edges), -1);
    for (const SignedWord& f : faces.faces) {
        int k = f.size();
        for (int t = 0; t < k; ++t) {
            int x = og.half_edge(f[t]);
            succ[static_cast<size_t>(x)] = og.half_edge(f.cyc(t + 1));
        }
    }

    og.inv.resize(static_cast<size_t>(og.half_edges));
    og.rot.resize(static_cast<size_t>(og.half_edges));
    for (int x = 0; x < og.half_edges; ++x) og.inv[static_cast<size_t>(x)] = x ^ 1;
    for (int x = 0; x < og.half_edges; ++x)
        og.rot[static_cast<size_t>(x)] = succ[static_cast<size_t>(x ^ 1)];

    // vertices = cycles of P
    og.vertex_of.assign(static_cast<size_t>(og.half_edges), -1);
    for (int start = 0; start < og.half_edges; ++start) {
        if (og.vertex_of[static_cast<size_t>(start)] >= 0) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            og.vertex_of[static_cast<size_t>(x)] = static_cast<int>(og.vertices.size());
            cycle.push_back(x);
            x = og.rot[static_cast<size_t>(x)];
        } while (x != start);
        og.vertices.push_back(std::move(cycle));
    }
    og.face_count = static_cast<int>(faces.faces.size());

    if (!og.connected()) throw MalformedWord("graph is disconnected");
    if (strict) {
        for (const auto& v : og.vertices)
            if (v.size() < 3)
                throw MalformedWord("degenerate vertex of degree " + std::to_string(v.size()));
    }
    return og;
}

OrderedGraph build_ordered_graph(const SignedWord& w, bool strict) {
    MultiWord m;
    m.faces.push_back(w);
    return build_ordered_graph(m, strict);
}

SurfaceInvariants invariants(const OrderedGraph& og) {
    SurfaceInvariants inv;
    inv.V = static_cast<int>(og.vertices.size());
    inv.E = og.edge_count();
    inv.F = og.face_count;
    int chi = inv.V - inv.E + inv.F;
    if ((2 - chi) % 2 != 0)
        throw NonIntegerGenus("Euler characteristic " + std::to_string(chi) +
                              " does not give an integer genus");
    inv.genus = (2 - chi) / 2;
    if (inv.V % 2 == 0) inv.k = inv.V / 2;
    inv.cubic = og.cubic();
    return inv;
}

int single_face_genus(const SignedWord& w) {
    OrderedGraph og = build_ordered_graph(w, /*strict=*/false);
    SurfaceInvariants inv = invariants(og);
    int n = w.size();
    bool length_ok = n >= 6 && (n + 6) % 12 == 0;
    int length_genus = length_ok ? (n + 6) / 12 : -1;
    if (!inv.cubic)
        throw GenusMismatch("word is not the boundary of a cubic graph");
    if (!length_ok || length_genus != inv.genus)
        throw GenusMismatch("length-derived genus " +
                            (length_ok ? std::to_string(length_genus) : std::string("(none)")) +
                            " does not match Euler-derived genus " + std::to_string(inv.genus));
    return inv.genus;
}

} // namespace wicks
