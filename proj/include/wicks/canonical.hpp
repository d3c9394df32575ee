#ifndef WICKS_CANONICAL_HPP
#define WICKS_CANONICAL_HPP

#include <utility>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// One equivalence class of Wicks forms (equivalence: relabeling letters,
// substituting letters for their inverses, cyclic permutation; orientation
// preserved, so no mirror).
struct CanonicalClass {
    SignedWord canon; // first-occurrence labeling, lexicographic minimum
    int aut_order = 1;
    int genus = 0; // (n+6)/12 when the length fits, 0 otherwise
};

// Relabels so letters are numbered by first occurrence starting at rotation
// `start`, with each letter's first occurrence made positive.
SignedWord first_occurrence_form(const SignedWord& w, int start = 0);

// Throws MalformedWord unless the word satisfies the letter-usage and
// irreducibility conditions.
CanonicalClass canonicalize(const SignedWord& w);

// Order of the automorphism group: the rotations of the cyclic word that
// admit a sign-respecting relabeling onto it. Always divides the length.
int aut_order(const SignedWord& w);

// Structures seen by an automorphism sigma of order 2 or 3 (vertex indices
// refer to the ordered graph of w).
struct StructureReport {
    int sigma_rotation = 0; // the rotation used as sigma
    int sigma_order = 0;

    std::vector<std::pair<int, int>> multiple_edges; // dense edge id pairs
    std::vector<std::pair<int, int>> diagonal_edges; // swapped by sigma (order 2)
    std::vector<int> automorphic_vertices;           // corner triple cycled (order 3)
    std::vector<std::pair<int, int>> neighbor_pairs; // automorphic, two-edge path
};

// Throws NoSuchAutomorphism if w has no automorphism of the requested order,
// MalformedWord if w is not a valid cubic single-face form.
StructureReport detect_structures(const SignedWord& w, int order);

} // namespace wicks

#endif
