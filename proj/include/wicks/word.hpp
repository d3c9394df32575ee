#ifndef WICKS_WORD_HPP
#define WICKS_WORD_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wicks/errors.hpp"

namespace wicks {

// An oriented letter of the abstract alphabet. Ids are dense non-negative
// integers assigned by first occurrence when parsing; names are presentation
// only.
struct Letter {
    int id = 0;
    int sign = 1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter x) { return {x.id, -x.sign}; }

// Order used for canonical comparison: by id, and +1 before -1 at equal id.
inline bool letter_less(Letter a, Letter b) {
    if (a.id != b.id) return a.id < b.id;
    return a.sign > b.sign;
}

// Cyclic word of oriented letters. Position arithmetic is modulo size().
struct SignedWord {
    std::vector<Letter> letters;

    SignedWord() = default;
    explicit SignedWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    Letter& operator[](int i) { return letters[static_cast<size_t>(i)]; }
    const Letter& operator[](int i) const { return letters[static_cast<size_t>(i)]; }

    // Cyclic access.
    const Letter& cyc(int i) const {
        int n = size();
        return letters[static_cast<size_t>(((i % n) + n) % n)];
    }

    SignedWord rotated(int r) const;

    // Number of distinct letter ids.
    int alphabet_size() const;
    // Largest id present, or -1 for the empty word.
    int max_id() const;

    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

// Lexicographic comparison of equal-length words under letter_less.
bool word_less(const SignedWord& a, const SignedWord& b);

// One boundary word per face.
struct MultiWord {
    std::vector<SignedWord> faces;

    int total_letters() const;
};

// --- text format ----------------------------------------------------------
//
// token      = identifier [A-Za-z_][A-Za-z0-9_]* optionally followed by one
//              apostrophe (inverse), e.g.  a b c a' b' c'
// word file  = one face word per line; blank lines and '#' comments ignored.

struct ParsedWords {
    MultiWord words;
    std::vector<std::string> names; // id -> original token name
};

// Throws MalformedWord on lexical errors.
ParsedWords parse_multiword(std::string_view text);

// Convenience: parse text that must contain exactly one face.
SignedWord parse_word(std::string_view text);

// Generated letter names: a..z, then x1, x2, ...
std::string letter_name(int id);

std::string to_string(const SignedWord& w);
std::string to_string(const SignedWord& w, const std::vector<std::string>& names);
std::string to_string(const MultiWord& m, const std::vector<std::string>& names);

// --- validation ------------------------------------------------------------

struct ValidationReport {
    bool nonempty = false;
    bool each_letter_twice = false;
    bool opposite_signs = false;
    bool irreducible = false;
    // g with |w| = 12g-6, or 0 if the length is not of that form.
    int length_genus = 0;

    std::vector<int> bad_multiplicity_ids; // ids occurring != 2 times
    std::vector<int> same_sign_ids;        // ids occurring twice with equal sign
    std::vector<std::pair<Letter, Letter>> reducible_pairs;

    // Conditions 1-2 (letter usage and irreducibility).
    bool core_valid() const {
        return nonempty && each_letter_twice && opposite_signs && irreducible;
    }
    // Core conditions plus the length constraint |w| = 12g-6.
    bool wicks_form() const { return core_valid() && length_genus >= 1; }
};

// Diagnostic; accepts any word and never throws.
ValidationReport validate_wicks(const SignedWord& w);

// Repeatedly replaces a pair of letters x,y occurring only as the subwords
// (xy)^{±1} by a fresh letter, until no such pair remains. Deterministic:
// always the pair at the lexicographically smallest (i, j) positions.
// Throws MalformedWord if some letter occurs != 2 times.
SignedWord reduce(const SignedWord& w);

// min(|U1|, |U2|) over the two open arcs between positions i and j.
// Throws std::out_of_range if i or j >= size, std::invalid_argument if i == j.
int distance(const SignedWord& w, int i, int j);

} // namespace wicks

#endif
