#include "wicks/corpus.hpp"

#include <algorithm>

#include "wicks/hyperbolic.hpp"
#include "wicks/surface.hpp"

namespace wicks {

namespace {

const char* kF2K12 =
    "e' a b c a' d b' c' d' e l m'\n"
    "m n f g h f' i g' h' i' n' l'\n";

const char* kF3K10 =
    "a1 a4 a5 a7 a1' a8 a5' a14' a10' a9'\n"
    "a14 a1' a7' a8' a9 a13' a15' a18' a19' a11'\n"
    "a10 a11 a12 a15 a16 a18 a12' a19 a16' a13\n";

const char* kF4K9 =
    "a1 a4 a5 a2 a3 a15' a18' a19' a9'\n"
    "a2' a6 a7 a1' a8 a6' a5' a11' a10\n"
    "a11 a4' a7' a8' a9 a12 a15 a16 a14'\n"
    "a14 a17 a18 a12' a19 a17' a16' a3' a10\n";

const char* kF6K8 =
    "a1 a4 a5 a2 a3 a20 a10' a9'\n"
    "a2' a6 a7 a1' a8 a6' a5' a13'\n"
    "a13 a4' a7' a8' a9 a14 a21 a3'\n"
    "a10 a11 a12 a15 a16 a23' a22' a14'\n"
    "a17 a18 a12' a19 a17' a16' a24 a23\n"
    "a15' a18' a19' a11' a20 a21 a22 a24'\n";

const char* kF12K7 =
    "a1 a2 a20 a21 a22 a10' a9'\n"
    "a3 a4 a5 a23 a24 a25 a20'\n"
    "a6 a7 a3' a2' a26 a27 a23'\n"
    "a1' a8 a6' a5' a29 a28' a26'\n"
    "a4' a7' a8' a9 a30 a31 a29'\n"
    "a10 a11 a12 a13 a33' a32' a30'\n"
    "a14 a15 a16 a34 a35 a36 a33\n"
    "a17 a18 a14' a13' a37 a38 a34'\n"
    "a12' a19 a17' a16' a40 a39 a37'\n"
    "a15' a18' a11' a22' a41 a40'\n"
    "a21' a25' a42 a35' a38' a39' a41'\n"
    "a42' a24' a27' a28 a31' a32 a36'\n";

ExoticExample make(const char* name, int f, int k, const char* text) {
    ExoticExample e;
    e.name = name;
    e.f = f;
    e.k = k;
    e.text = text;
    e.parsed = parse_multiword(text);
    return e;
}

} // namespace

const std::vector<ExoticExample>& corpus() {
    static const std::vector<ExoticExample> examples = {
        make("f2k12", 2, 12, kF2K12),  make("f3k10", 3, 10, kF3K10),
        make("f4k9", 4, 9, kF4K9),     make("f6k8", 6, 8, kF6K8),
        make("f12k7", 12, 7, kF12K7),
    };
    return examples;
}

const ExoticExample* corpus_find(const std::string& name) {
    for (const ExoticExample& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

ExampleReport verify(const ExoticExample& e, const ParsedWords& input, bool corrected) {
    ExampleReport rep;
    rep.name = e.name;
    rep.corrected_variant = corrected;
    rep.f_expected = e.f;
    rep.k_expected = e.k;

    const MultiWord& m = input.words;
    rep.faces = static_cast<int>(m.faces.size());
    for (const SignedWord& face : m.faces) rep.word_lengths.push_back(face.size());
    rep.shape_ok = rep.faces == e.f &&
                   std::all_of(rep.word_lengths.begin(), rep.word_lengths.end(),
                               [&](int len) { return len == e.k; });

    // letter usage across all faces
    std::vector<int> plus(input.names.size(), 0), minus(input.names.size(), 0);
    for (const SignedWord& face : m.faces)
        for (const Letter& l : face.letters)
            ++(l.sign > 0 ? plus : minus)[static_cast<size_t>(l.id)];
    rep.orientation_ok = true;
    for (size_t id = 0; id < input.names.size(); ++id) {
        int total = plus[id] + minus[id];
        if (total != 2) {
            rep.multiplicity_violations[input.names[id]] = total;
            rep.orientation_ok = false;
        } else if (plus[id] != 1) {
            rep.same_sign_letters.push_back(input.names[id]);
            rep.orientation_ok = false;
        }
    }

    try {
        OrderedGraph og = build_ordered_graph(m);
        SurfaceInvariants inv = invariants(og);
        rep.built = true;
        rep.V = inv.V;
        rep.E = inv.E;
        rep.F = inv.F;
        rep.genus = inv.genus;
        rep.k_observed = inv.k;
        rep.cubic = inv.cubic;
        rep.k_identity_ok =
            inv.k.has_value() && *inv.k == 2 * inv.genus + rep.faces - 2;
    } catch (const std::exception& ex) {
        rep.build_error = ex.what();
    }

    rep.regular_feasible = e.k >= 7;
    if (rep.regular_feasible) rep.side_length = regular_side_length(e.k);
    return rep;
}

} // namespace

ExampleReport verify_example(const ExoticExample& e) { return verify(e, e.parsed, false); }

ExampleReport verify_corrected(const ExoticExample& base, const ParsedWords& replacement) {
    return verify(base, replacement, true);
}

} // namespace wicks
