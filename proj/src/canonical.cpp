#include "wicks/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "wicks/surface.hpp"

namespace wicks {

SignedWord first_occurrence_form(const SignedWord& w, int start) {
    int n = w.size();
    std::vector<int> new_id(static_cast<size_t>(w.max_id() + 1), -1);
    std::vector<int> flip(static_cast<size_t>(w.max_id() + 1), 0);
    SignedWord out;
    out.letters.reserve(static_cast<size_t>(n));
    int next = 0;
    for (int t = 0; t < n; ++t) {
        Letter l = w.cyc(start + t);
        size_t id = static_cast<size_t>(l.id);
        if (new_id[id] < 0) {
            new_id[id] = next++;
            flip[id] = l.sign < 0;
        }
        int s = flip[id] ? -l.sign : l.sign;
        out.letters.push_back(Letter{new_id[id], s});
    }
    return out;
}

namespace {

// minimum first-occurrence form over rotations, plus its multiplicity
std::pair<SignedWord, int> min_rotation_form(const SignedWord& w) {
    int n = w.size();
    SignedWord best = first_occurrence_form(w, 0);
    int mult = 1;
    for (int r = 1; r < n; ++r) {
        SignedWord f = first_occurrence_form(w, r);
        if (f == best) {
            ++mult;
        } else if (word_less(f, best)) {
            best = std::move(f);
            mult = 1;
        }
    }
    return {std::move(best), mult};
}

void require_core_valid(const SignedWord& w) {
    ValidationReport rep = validate_wicks(w);
    if (!rep.core_valid())
        throw MalformedWord("word violates the letter-usage or irreducibility conditions");
}

} // namespace

CanonicalClass canonicalize(const SignedWord& w) {
    require_core_valid(w);
    CanonicalClass cls;
    auto [best, mult] = min_rotation_form(w);
    cls.canon = std::move(best);
    cls.aut_order = mult;
    int n = w.size();
    cls.genus = (n >= 6 && (n + 6) % 12 == 0) ? (n + 6) / 12 : 0;
    return cls;
}

int aut_order(const SignedWord& w) {
    require_core_valid(w);
    return min_rotation_form(w).second;
}

StructureReport detect_structures(const SignedWord& w, int order) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("structure detection is defined for orders 2 and 3");

    CanonicalClass cls = canonicalize(w);
    int n = w.size();

    // automorphisms are the rotations by multiples of n/aut_order; pick the
    // first of the requested order
    SignedWord base = first_occurrence_form(w, 0);
    int sigma = -1;
    for (int r = 1; r < n; ++r) {
        if (n / std::gcd(n, r) != order) continue;
        if (first_occurrence_form(w, r) == base) {
            sigma = r;
            break;
        }
    }
    if (sigma < 0)
        throw NoSuchAutomorphism("word has no automorphism of order " + std::to_string(order) +
                                 " (aut order " + std::to_string(cls.aut_order) + ")");

    StructureReport rep;
    rep.sigma_rotation = sigma;
    rep.sigma_order = order;

    OrderedGraph og = build_ordered_graph(w, /*strict=*/true);

    // corner i lies between w[i] and w[i+1], at the vertex entered by w[i]
    std::vector<std::vector<int>> corners(og.vertices.size());
    const SignedWord& face = og.faces.faces.front();
    for (int i = 0; i < n; ++i)
        corners[static_cast<size_t>(og.vertex_of[static_cast<size_t>(og.half_edge(face[i]))])]
            .push_back(i);

    auto sigma_corner = [&](int c) { return (c + sigma) % n; };

    int e = og.edge_count();
    for (int x = 0; x < e; ++x) {
        auto [xu, xv] = og.edge_endpoints(x);
        if (xu == xv) continue; // loop
        for (int y = x + 1; y < e; ++y) {
            auto [yu, yv] = og.edge_endpoints(y);
            if (yu == yv) continue;
            if (std::minmax(xu, xv) != std::minmax(yu, yv)) continue;
            rep.multiple_edges.emplace_back(x, y);
            if (order != 2) continue;

            // corner between edges x and y at each shared endpoint
            auto corner_between = [&](int vtx) {
                for (int c : corners[static_cast<size_t>(vtx)]) {
                    int id1 = face[c].id;
                    int id2 = face.cyc(c + 1).id;
                    if ((id1 == x && id2 == y) || (id1 == y && id2 == x)) return c;
                }
                return -1;
            };
            int cu = corner_between(xu);
            int cv = corner_between(xv);
            if (cu >= 0 && cv >= 0 && sigma_corner(cu) == cv)
                rep.diagonal_edges.emplace_back(x, y);
        }
    }

    if (order == 3) {
        for (size_t v = 0; v < og.vertices.size(); ++v) {
            const std::vector<int>& cs = corners[v];
            if (cs.size() != 3) continue;
            std::set<int> orig(cs.begin(), cs.end());
            std::set<int> image;
            for (int c : cs) image.insert(sigma_corner(c));
            if (orig == image) rep.automorphic_vertices.push_back(static_cast<int>(v));
        }

        // adjacency between vertices
        auto adjacent = [&](int a, int b) {
            for (int x = 0; x < e; ++x) {
                auto [u, v] = og.edge_endpoints(x);
                if ((u == a && v == b) || (u == b && v == a)) return true;
            }
            return false;
        };
        const std::vector<int>& av = rep.automorphic_vertices;
        for (size_t i = 0; i < av.size(); ++i) {
            for (size_t j = i + 1; j < av.size(); ++j) {
                if (adjacent(av[i], av[j])) continue;
                bool common = false;
                for (size_t m = 0; m < og.vertices.size() && !common; ++m) {
                    int mv = static_cast<int>(m);
                    if (mv == av[i] || mv == av[j]) continue;
                    common = adjacent(av[i], mv) && adjacent(av[j], mv);
                }
                if (common) rep.neighbor_pairs.emplace_back(av[i], av[j]);
            }
        }
    }
    return rep;
}

} // namespace wicks
