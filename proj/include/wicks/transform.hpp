#ifndef WICKS_TRANSFORM_HPP
#define WICKS_TRANSFORM_HPP

#include <vector>

#include "wicks/canonical.hpp"
#include "wicks/word.hpp"

namespace wicks {

enum class TransformKind { alpha, beta, gamma };

// A place to apply one genus-raising transformation. Each split letter is
// replaced by a fresh adjacent pair; `sides[i]` selects which occurrence of
// split letter i is acted on: +1 the positive one, -1 the negative one. For
// alpha/beta the selected occurrence receives the inserted fragment; for
// gamma the selections are the orientation pattern (epsilon, delta, psi).
struct TransformSite {
    TransformKind kind = TransformKind::alpha;
    int ids[3] = {-1, -1, -1};
    int sides[3] = {+1, +1, +1};
};

// Each transformation adds 12 letters and raises the genus by one.
// All throw BadSite when the site does not apply (letter absent, letters not
// distinct, or for gamma the chosen occurrences not in cyclic order), and
// MalformedWord when the input violates the letter-usage conditions.
SignedWord apply_alpha(const SignedWord& w, const TransformSite& site);
SignedWord apply_beta(const SignedWord& w, const TransformSite& site);
SignedWord apply_gamma(const SignedWord& w, const TransformSite& site);

SignedWord apply_transform(const SignedWord& w, const TransformSite& site);

// All sites applicable to w: every letter x 2 sides (alpha), every ordered
// pair x 4 side combinations (beta), every ordered triple x 8 orientation
// patterns with a valid cyclic order (gamma). Over-generation is harmless;
// the enumerator dedups by canonical form.
std::vector<TransformSite> all_sites(const SignedWord& w);

struct EnumerateOptions {
    int genus_limit = 3;
    int threads = 1;
};

// All equivalence classes of genus-g Wicks forms, grown inductively from
// abca'b'c' and deduplicated by canonical form; sorted by canonical word.
// Throws LimitExceeded above the configured genus limit.
std::vector<CanonicalClass> enumerate_genus(int g, const EnumerateOptions& opts = {});

} // namespace wicks

#endif
