#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wicks/word.hpp"

using namespace wicks;

TEST_CASE("parsing assigns dense ids by first occurrence") {
    SignedWord w = parse_word("a b c a' b' c'");
    REQUIRE(w.size() == 6);
    CHECK(w[0] == Letter{0, +1});
    CHECK(w[3] == Letter{0, -1});
    CHECK(w[5] == Letter{2, -1});

    SignedWord renamed = parse_word("foo bar foo' bar'");
    CHECK(renamed[0] == Letter{0, +1});
    CHECK(to_string(renamed) == "a b a' b'");
}

TEST_CASE("parse and serialize round-trip on the canonical token stream") {
    for (const char* text : {"a b c a' b' c'", "a b a' c b' c'", "a", "a b c d e f f' e' d' c' b' a'"}) {
        CHECK(to_string(parse_word(text)) == text);
    }
}

TEST_CASE("multiword files: one face per line, comments ignored") {
    ParsedWords p = parse_multiword("# two faces\na b a' b'\n\nc d c' d'  # trailing\n");
    REQUIRE(p.words.faces.size() == 2);
    CHECK(p.words.faces[0].size() == 4);
    CHECK(p.names[0] == "a");
    CHECK(p.names[2] == "c");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_word("a b''"), MalformedWord);
    CHECK_THROWS_AS(parse_word("a 3b"), MalformedWord);
    CHECK_THROWS_AS(parse_word(""), MalformedWord);     // no face at all
    CHECK_THROWS_AS(parse_word("a b\nc d"), MalformedWord); // two faces
}

TEST_CASE("generated letter names") {
    CHECK(letter_name(0) == "a");
    CHECK(letter_name(25) == "z");
    CHECK(letter_name(26) == "x1");
    CHECK(letter_name(27) == "x2");
}

TEST_CASE("validate_wicks on the genus-1 form") {
    ValidationReport rep = validate_wicks(parse_word("a b c a' b' c'"));
    CHECK(rep.nonempty);
    CHECK(rep.each_letter_twice);
    CHECK(rep.opposite_signs);
    CHECK(rep.irreducible);
    CHECK(rep.length_genus == 1);
    CHECK(rep.wicks_form());
}

TEST_CASE("validate_wicks flags a reducible pair") {
    ValidationReport rep = validate_wicks(parse_word("a b c b' a' c'"));
    CHECK(rep.each_letter_twice);
    CHECK(rep.opposite_signs);
    CHECK_FALSE(rep.irreducible);
    REQUIRE(rep.reducible_pairs.size() == 1);
    CHECK(rep.reducible_pairs[0].first.id == 0);  // pair (a, b)
    CHECK(rep.reducible_pairs[0].second.id == 1);
}

TEST_CASE("validate_wicks flags same-sign letters") {
    ValidationReport rep = validate_wicks(parse_word("a a b b'"));
    CHECK(rep.each_letter_twice);
    CHECK_FALSE(rep.opposite_signs);
    REQUIRE(rep.same_sign_ids == std::vector<int>{0});
}

TEST_CASE("validate_wicks flags multiplicities and the empty word") {
    ValidationReport rep = validate_wicks(parse_word("a a a' b"));
    CHECK_FALSE(rep.each_letter_twice);
    CHECK(rep.bad_multiplicity_ids == std::vector<int>{0, 1});

    ValidationReport empty = validate_wicks(SignedWord{});
    CHECK_FALSE(empty.nonempty);
    CHECK_FALSE(empty.core_valid());
}

TEST_CASE("length flag is separate from core validity") {
    // irreducible and balanced, but length 4 is not 12g-6
    ValidationReport rep = validate_wicks(parse_word("a b a' b'"));
    CHECK(rep.core_valid());
    CHECK(rep.length_genus == 0);
    CHECK_FALSE(rep.wicks_form());
}

TEST_CASE("reduce merges the reducible pair") {
    SignedWord r = reduce(parse_word("a b c b' a' c'"));
    REQUIRE(r.size() == 4);
    // shape z c z' c' up to relabeling
    CHECK(r[0].id != r[1].id);
    CHECK(r[2] == inverse(r[0]));
    CHECK(r[3] == inverse(r[1]));
    CHECK(validate_wicks(r).core_valid());
}

TEST_CASE("reduce is the identity on irreducible words") {
    SignedWord w = parse_word("a b c a' b' c'");
    CHECK(reduce(w) == w);
    SignedWord r = reduce(parse_word("a b c b' a' c'"));
    CHECK(reduce(r) == r);
}

TEST_CASE("reduce rejects bad multiplicities") {
    CHECK_THROWS_AS(reduce(parse_word("a a a' b b'")), MalformedWord);
}

TEST_CASE("distance between positions") {
    SignedWord w = parse_word("a b c a' b' c'");
    CHECK(distance(w, 0, 3) == 2);
    CHECK(distance(w, 0, 1) == 0);
    CHECK(distance(w, 3, 0) == 2);
    CHECK_THROWS_AS(distance(w, 0, 6), std::out_of_range);
    CHECK_THROWS_AS(distance(w, 2, 2), std::invalid_argument);
}

TEST_CASE("distance properties: symmetry and upper bound") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 * (2 + static_cast<int>(rng() % 9));
        std::vector<Letter> ls;
        for (int i = 0; i < n / 2; ++i) {
            ls.push_back(Letter{i, +1});
            ls.push_back(Letter{i, -1});
        }
        std::shuffle(ls.begin(), ls.end(), rng);
        SignedWord w{ls};
        int i = static_cast<int>(rng() % static_cast<unsigned>(n));
        int j = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (i == j) continue;
        CHECK(distance(w, i, j) == distance(w, j, i));
        CHECK(distance(w, i, j) <= (n - 2) / 2);
    }
}
