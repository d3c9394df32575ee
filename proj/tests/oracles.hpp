#ifndef WICKS_TESTS_ORACLES_HPP
#define WICKS_TESTS_ORACLES_HPP

// Test-only oracles, independent of the transformation-based enumerator:
// a backtracking search over all first-occurrence-labeled words, and
// definition-based equivalence / automorphism checks that do not go through
// the canonical form.

#include <vector>

#include "wicks/word.hpp"

namespace wicks::oracle {

// All irreducible single-face cubic boundary words of length n, in
// first-occurrence labeling (first occurrence of every letter positive).
// Words that fail the Wicks conditions or whose graph is not cubic of the
// matching genus are filtered out.
std::vector<SignedWord> backtrack_words(int n);

// Definition-based: some rotation of a admits a sign-respecting relabeling
// onto b. Builds the letter bijection position by position.
bool equivalent(const SignedWord& a, const SignedWord& b);

// Number of rotations of w that admit a sign-respecting relabeling onto w,
// counted by direct matching.
int rotation_aut_count(const SignedWord& w);

} // namespace wicks::oracle

#endif
