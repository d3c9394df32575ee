// Command-line front end: validate, canonicalize, aut, genus, enumerate,
// census, realize, project, corpus. Data goes to stdout (or --out),
// diagnostics to stderr. Exit codes: 0 success / all checks pass, 1 check
// failure, 2 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wicks/canonical.hpp"
#include "wicks/census.hpp"
#include "wicks/corpus.hpp"
#include "wicks/errors.hpp"
#include "wicks/hyperbolic.hpp"
#include "wicks/surface.hpp"
#include "wicks/transform.hpp"
#include "wicks/word.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kWordGrammar =
    "word format: whitespace-separated tokens, one face word per line;\n"
    "  token = identifier [A-Za-z_][A-Za-z0-9_]* with an optional trailing\n"
    "  apostrophe for the inverse, e.g.  a b c a' b' c'\n"
    "  blank lines and '#' comments are ignored";

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ostream& data_out(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
    return file;
}

ordered_json validation_json(const wicks::ValidationReport& rep,
                             const std::vector<std::string>& names) {
    ordered_json j;
    j["valid"] = rep.core_valid();
    j["wicks_form"] = rep.wicks_form();
    j["nonempty"] = rep.nonempty;
    j["each_letter_twice"] = rep.each_letter_twice;
    j["opposite_signs"] = rep.opposite_signs;
    j["irreducible"] = rep.irreducible;
    j["length_genus"] = rep.length_genus ? ordered_json(rep.length_genus) : ordered_json(nullptr);
    auto name_of = [&](int id) {
        return id < static_cast<int>(names.size()) ? names[static_cast<size_t>(id)]
                                                   : wicks::letter_name(id);
    };
    ordered_json bad = ordered_json::array();
    for (int id : rep.bad_multiplicity_ids) bad.push_back(name_of(id));
    j["bad_multiplicity"] = bad;
    ordered_json same = ordered_json::array();
    for (int id : rep.same_sign_ids) same.push_back(name_of(id));
    j["same_sign"] = same;
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : rep.reducible_pairs) {
        std::string sx = name_of(x.id) + (x.sign < 0 ? "'" : "");
        std::string sy = name_of(y.id) + (y.sign < 0 ? "'" : "");
        pairs.push_back(ordered_json::array({sx, sy}));
    }
    j["reducible_pairs"] = pairs;
    return j;
}

ordered_json invariants_json(const wicks::SurfaceInvariants& inv) {
    ordered_json j;
    j["V"] = inv.V;
    j["E"] = inv.E;
    j["F"] = inv.F;
    j["genus"] = inv.genus;
    j["k"] = inv.k ? ordered_json(*inv.k) : ordered_json(nullptr);
    j["cubic"] = inv.cubic;
    return j;
}

ordered_json report_json(const wicks::BoundReport& rep) {
    ordered_json j;
    j["genus"] = rep.genus;
    ordered_json checks = ordered_json::array();
    for (const wicks::BoundCheck& c : rep.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    return j;
}

ordered_json example_json(const wicks::ExampleReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    if (rep.corrected_variant) j["corrected_variant"] = true;
    j["f_expected"] = rep.f_expected;
    j["k_expected"] = rep.k_expected;
    j["faces"] = rep.faces;
    j["word_lengths"] = rep.word_lengths;
    j["shape_ok"] = rep.shape_ok;
    j["multiplicity_violations"] = rep.multiplicity_violations;
    j["same_sign_letters"] = rep.same_sign_letters;
    j["orientation_ok"] = rep.orientation_ok;
    j["built"] = rep.built;
    if (rep.built) {
        j["V"] = rep.V;
        j["E"] = rep.E;
        j["F"] = rep.F;
        j["genus"] = rep.genus;
        j["k"] = rep.k_observed ? ordered_json(*rep.k_observed) : ordered_json(nullptr);
        j["cubic"] = rep.cubic;
        j["k_identity_ok"] = rep.k_identity_ok;
    } else {
        j["build_error"] = rep.build_error;
    }
    j["regular_feasible"] = rep.regular_feasible;
    if (rep.side_length) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", *rep.side_length);
        j["side_length"] = std::stod(buf);
    }
    return j;
}

std::vector<double> read_lengths(const std::string& path) {
    std::istringstream in(read_input(path));
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-face Wicks form census and hyperbolic net realization"};
    app.footer(kWordGrammar);
    app.require_subcommand(1);

    std::string in_path, out_path, lengths_path, corrected_path, name;
    int genus = 1;
    int max_genus = 3;
    int threads = 1;
    double tolerance = 1e-8;
    bool regular = false, list = false;

    auto* validate = app.add_subcommand("validate", "check the Wicks form conditions");
    validate->add_option("file", in_path, "word file ('-' for stdin)")->required();

    auto* canonicalize = app.add_subcommand("canonicalize", "canonical representative and aut order");
    canonicalize->add_option("file", in_path)->required();

    auto* aut = app.add_subcommand("aut", "automorphism group order");
    aut->add_option("file", in_path)->required();

    auto* genus_cmd = app.add_subcommand("genus", "surface invariants of a single-face word");
    genus_cmd->add_option("file", in_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "all genus-g classes as JSON lines");
    enumerate->add_option("--genus", genus, "target genus")->required();
    enumerate->add_option("--out", out_path, "output file (default stdout)");
    enumerate->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--max-genus", max_genus, "enumeration guard (hard cap 4)");

    auto* census = app.add_subcommand("census", "counting identities against a census file");
    census->add_option("--genus", genus, "census genus")->required();
    census->add_option("--in", in_path, "census JSONL file")->required();

    auto* realize = app.add_subcommand("realize", "regular hyperbolic realization of a word");
    realize->add_option("--word", in_path, "word file")->required();
    realize->add_flag("--regular", regular, "use the regular (equal sides) point");

    auto* project = app.add_subcommand("project", "project a length vector onto the variety");
    project->add_option("--word", in_path, "word file")->required();
    project->add_option("--lengths", lengths_path, "length file, one decimal per line")->required();
    project->add_option("--out", out_path, "output file (default stdout)");
    project->add_option("--tolerance", tolerance, "residual tolerance")->check(CLI::PositiveNumber);

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in multi-face examples");
    corpus_cmd->add_flag("--list", list, "list example names");
    corpus_cmd->add_option("--verify", name, "verify one example by name");
    corpus_cmd->add_option("--corrected", corrected_path, "sidecar file with a corrected variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        std::cerr << kWordGrammar << '\n';
        return 2;
    }

    try {
        if (*validate) {
            wicks::ParsedWords p = wicks::parse_multiword(read_input(in_path));
            if (p.words.faces.size() != 1) {
                std::cerr << "validate expects exactly one word\n" << kWordGrammar << '\n';
                return 2;
            }
            wicks::ValidationReport rep = wicks::validate_wicks(p.words.faces.front());
            std::cout << validation_json(rep, p.names).dump(2) << '\n';
            return rep.core_valid() ? 0 : 1;
        }

        if (*canonicalize) {
            wicks::SignedWord w = wicks::parse_word(read_input(in_path));
            wicks::CanonicalClass cls = wicks::canonicalize(w);
            ordered_json j;
            j["canon"] = wicks::to_string(cls.canon);
            j["aut"] = cls.aut_order;
            j["genus"] = cls.genus ? ordered_json(cls.genus) : ordered_json(nullptr);
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*aut) {
            wicks::SignedWord w = wicks::parse_word(read_input(in_path));
            ordered_json j;
            j["aut"] = wicks::aut_order(w);
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*genus_cmd) {
            wicks::SignedWord w = wicks::parse_word(read_input(in_path));
            int g = wicks::single_face_genus(w);
            wicks::SurfaceInvariants inv =
                wicks::invariants(wicks::build_ordered_graph(w, /*strict=*/false));
            ordered_json j = invariants_json(inv);
            j["genus"] = g;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*enumerate) {
            if (max_genus > 4) {
                std::cerr << "LimitExceeded: --max-genus is capped at 4\n";
                return 2;
            }
            wicks::EnumerateOptions opts;
            opts.genus_limit = max_genus;
            opts.threads = threads;
            std::vector<wicks::CanonicalClass> classes;
            try {
                classes = wicks::enumerate_genus(genus, opts);
            } catch (const wicks::LimitExceeded& e) {
                std::cerr << "LimitExceeded: " << e.what() << '\n';
                return 2;
            }
            std::ofstream file;
            std::ostream& out = data_out(out_path, file);
            wicks::write_census(out, wicks::census_records(classes));
            return 0;
        }

        if (*census) {
            std::istringstream in(read_input(in_path));
            std::vector<wicks::CensusRecord> recs = wicks::read_census(in);
            wicks::CensusStats stats = wicks::census_stats(recs, genus);
            wicks::BoundReport bounds = wicks::check_bounds(stats);
            wicks::BoundReport hist = wicks::check_aut_histogram(stats);
            ordered_json j;
            j["genus"] = genus;
            j["classes"] = stats.class_count;
            j["rooted_sum"] = stats.rooted_sum.str();
            j["rooted_count"] = wicks::rooted_count(genus).str();
            j["asymptotic_main_term"] = wicks::asymptotic_main_term(genus).str();
            ordered_json histo;
            for (const auto& [order, count] : stats.aut_histogram)
                histo[std::to_string(order)] = count;
            j["aut_histogram"] = histo;
            j["bounds"] = report_json(bounds);
            j["aut_bounds"] = report_json(hist);
            // the exit code gates on the counting identities; the
            // automorphism inequalities are reported alongside (the strict
            // nontrivial bound only starts holding at genus 3)
            j["identities_pass"] = bounds.all_pass();
            j["aut_checks_pass"] = hist.all_pass();
            std::cout << j.dump(2) << '\n';
            return bounds.all_pass() ? 0 : 1;
        }

        if (*realize) {
            if (!regular) {
                std::cerr << "realize currently supports only --regular\n";
                return 2;
            }
            wicks::SignedWord w = wicks::parse_word(read_input(in_path));
            int n = w.size();
            double side = wicks::regular_side_length(n);
            std::vector<double> lengths(static_cast<size_t>(n), side);
            wicks::ClosureResidual res = wicks::membership_residual(w, lengths);
            ordered_json j;
            j["n"] = n;
            j["side"] = side;
            j["holonomy_residual"] = res.max_abs();
            j["residual_dimension"] = res.dimension();
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*project) {
            wicks::SignedWord w = wicks::parse_word(read_input(in_path));
            std::vector<double> start = read_lengths(lengths_path);
            wicks::ProjectOptions opts;
            opts.tolerance = tolerance;
            wicks::ProjectionResult result = wicks::project_to_variety(w, start, opts);
            std::ofstream file;
            std::ostream& out = data_out(out_path, file);
            char buf[64];
            for (double l : result.lengths) {
                std::snprintf(buf, sizeof buf, "%.17g", l);
                out << buf << '\n';
            }
            std::cerr << "converged in " << result.iterations << " iterations, residual "
                      << result.residual_norm << '\n';
            return 0;
        }

        if (*corpus_cmd) {
            if (list) {
                for (const wicks::ExoticExample& e : wicks::corpus()) std::cout << e.name << '\n';
                return 0;
            }
            if (name.empty()) {
                std::cerr << "corpus needs --list or --verify NAME\n";
                return 2;
            }
            const wicks::ExoticExample* ex = wicks::corpus_find(name);
            if (!ex) {
                std::cerr << "unknown example '" << name << "'\n";
                return 2;
            }
            wicks::ExampleReport rep;
            if (!corrected_path.empty()) {
                wicks::ParsedWords replacement = wicks::parse_multiword(read_input(corrected_path));
                rep = wicks::verify_corrected(*ex, replacement);
            } else {
                rep = wicks::verify_example(*ex);
            }
            std::cout << example_json(rep).dump(2) << '\n';
            return 0;
        }
    } catch (const wicks::MalformedWord& e) {
        std::cerr << "MalformedWord: " << e.what() << '\n' << kWordGrammar << '\n';
        return 1;
    } catch (const wicks::OrientationError& e) {
        std::cerr << "OrientationError: " << e.what() << '\n';
        return 1;
    } catch (const wicks::GenusMismatch& e) {
        std::cerr << "GenusMismatch: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
