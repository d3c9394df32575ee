#ifndef WICKS_CORPUS_HPP
#define WICKS_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// A built-in multi-face example: f regular k-gons whose sides carry the
// boundary words. The words are embedded exactly as printed, inconsistencies
// included; verification reports them and never repairs them.
struct ExoticExample {
    std::string name;
    int f = 0;
    int k = 0;
    std::string text; // word file content
    ParsedWords parsed;
};

const std::vector<ExoticExample>& corpus();
const ExoticExample* corpus_find(const std::string& name);

struct ExampleReport {
    std::string name;
    bool corrected_variant = false;
    int f_expected = 0;
    int k_expected = 0;

    int faces = 0;
    std::vector<int> word_lengths;
    bool shape_ok = false; // f faces, every length k

    std::map<std::string, int> multiplicity_violations; // letter -> count
    std::vector<std::string> same_sign_letters;
    bool orientation_ok = false;

    bool built = false;
    std::string build_error;
    int V = 0, E = 0, F = 0, genus = 0;
    std::optional<int> k_observed;
    bool cubic = false;
    bool k_identity_ok = false; // k = 2g + f - 2

    bool regular_feasible = false; // k >= 7
    std::optional<double> side_length;
};

ExampleReport verify_example(const ExoticExample& e);

// Verifies a user-supplied corrected variant against the same expectations.
ExampleReport verify_corrected(const ExoticExample& base, const ParsedWords& replacement);

} // namespace wicks

#endif
