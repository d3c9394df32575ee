#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wicks/corpus.hpp"

using namespace wicks;

TEST_CASE("all five examples load with the declared face counts") {
    REQUIRE(corpus().size() == 5);
    for (const ExoticExample& e : corpus()) {
        CHECK(e.parsed.words.faces.size() > 0);
        CHECK(corpus_find(e.name) == &e);
    }
    CHECK(corpus_find("nope") == nullptr);
}

TEST_CASE("f2k12 passes every check and lies on a genus-2 surface") {
    ExampleReport rep = verify_example(*corpus_find("f2k12"));
    CHECK(rep.shape_ok);
    CHECK(rep.multiplicity_violations.empty());
    CHECK(rep.same_sign_letters.empty());
    CHECK(rep.orientation_ok);
    REQUIRE(rep.built);
    CHECK(rep.V == 8);
    CHECK(rep.E == 12);
    CHECK(rep.F == 2);
    CHECK(rep.genus == 2);
    CHECK(rep.cubic);
    REQUIRE(rep.k_observed.has_value());
    CHECK(*rep.k_observed == 4);
    CHECK(rep.k_identity_ok); // k = 2g + f - 2 = 4
    CHECK(rep.regular_feasible);
    CHECK(*rep.side_length > 0);
}

TEST_CASE("f3k10 reports the triple occurrence of a1 as printed") {
    ExampleReport rep = verify_example(*corpus_find("f3k10"));
    CHECK(rep.shape_ok); // 3 faces of length 10
    REQUIRE(rep.multiplicity_violations.count("a1") == 1);
    CHECK(rep.multiplicity_violations.at("a1") == 3);
    CHECK_FALSE(rep.orientation_ok);
    CHECK_FALSE(rep.built); // never silently repaired
}

TEST_CASE("f4k9 reports the same-sign pair a10 as printed") {
    ExampleReport rep = verify_example(*corpus_find("f4k9"));
    CHECK(rep.shape_ok);
    bool found = false;
    for (const std::string& name : rep.same_sign_letters) found |= name == "a10";
    CHECK(found);
    CHECK_FALSE(rep.orientation_ok);
    CHECK_FALSE(rep.built);
}

TEST_CASE("f12k7 loads and is feasible as a regular 7-gon net") {
    ExampleReport rep = verify_example(*corpus_find("f12k7"));
    CHECK(rep.faces == 12);
    CHECK(rep.k_expected == 7);
    CHECK(rep.regular_feasible);
    // the tenth word has 6 letters as printed
    CHECK(rep.word_lengths[9] == 6);
    CHECK_FALSE(rep.shape_ok);
}

TEST_CASE("letter counts match f*k across the corpus") {
    for (const ExoticExample& e : corpus()) {
        ExampleReport rep = verify_example(e);
        int total = 0;
        for (int len : rep.word_lengths) total += len;
        if (rep.shape_ok) CHECK(total == e.f * e.k);
    }
}

TEST_CASE("repository data files mirror the embedded corpus") {
    for (const ExoticExample& e : corpus()) {
        std::ifstream in(std::string(WICKS_SOURCE_DIR) + "/data/corpus/" + e.name + ".words");
        REQUIRE_MESSAGE(in.good(), e.name);
        std::ostringstream buf;
        buf << in.rdbuf();
        ParsedWords file = parse_multiword(buf.str());
        REQUIRE(file.words.faces.size() == e.parsed.words.faces.size());
        for (size_t i = 0; i < file.words.faces.size(); ++i)
            CHECK(file.words.faces[i] == e.parsed.words.faces[i]);
        CHECK(file.names == e.parsed.names);
    }
}

TEST_CASE("corrected variants are verified and labeled") {
    const ExoticExample* e = corpus_find("f2k12");
    ParsedWords replacement = parse_multiword(e->text);
    ExampleReport rep = verify_corrected(*e, replacement);
    CHECK(rep.corrected_variant);
    CHECK(rep.orientation_ok);
}
