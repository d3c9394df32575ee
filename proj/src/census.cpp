#include "wicks/census.hpp"

#include <istream>
#include <json.hpp>
#include <ostream>

#include "wicks/errors.hpp"
#include "wicks/surface.hpp"

namespace wicks {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const CensusRecord& rec) {
    ordered_json j;
    j["genus"] = rec.genus;
    j["canon"] = rec.canon;
    j["aut"] = rec.aut;
    j["V"] = rec.V;
    j["E"] = rec.E;
    j["F"] = rec.F;
    return j.dump();
}

CensusRecord census_record_from_json(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    CensusRecord rec;
    rec.genus = j.at("genus").get<int>();
    rec.canon = j.at("canon").get<std::string>();
    rec.aut = j.at("aut").get<int>();
    rec.V = j.at("V").get<int>();
    rec.E = j.at("E").get<int>();
    rec.F = j.at("F").get<int>();
    return rec;
}

std::vector<CensusRecord> census_records(const std::vector<CanonicalClass>& classes) {
    std::vector<CensusRecord> out;
    out.reserve(classes.size());
    for (const CanonicalClass& cls : classes) {
        SurfaceInvariants inv = invariants(build_ordered_graph(cls.canon));
        out.push_back(CensusRecord{cls.genus, to_string(cls.canon), cls.aut_order,
                                   inv.V, inv.E, inv.F});
    }
    return out;
}

std::vector<CensusRecord> read_census(std::istream& in) {
    std::vector<CensusRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(census_record_from_json(line));
    }
    return out;
}

void write_census(std::ostream& out, const std::vector<CensusRecord>& recs) {
    for (const CensusRecord& rec : recs) out << to_json_line(rec) << '\n';
}

long CensusStats::count_aut_multiple_of(int k) const {
    long total = 0;
    for (const auto& [order, count] : aut_histogram)
        if (order % k == 0) total += count;
    return total;
}

long CensusStats::count_nontrivial() const {
    long total = 0;
    for (const auto& [order, count] : aut_histogram)
        if (order >= 2) total += count;
    return total;
}

CensusStats census_stats(const std::vector<CensusRecord>& recs, int genus) {
    CensusStats stats;
    stats.genus = genus;
    int n = 12 * genus - 6;
    for (const CensusRecord& rec : recs) {
        if (rec.genus != genus) continue;
        ++stats.class_count;
        if (rec.aut <= 0 || n % rec.aut != 0)
            throw NonInteger("aut order " + std::to_string(rec.aut) +
                             " does not divide " + std::to_string(n));
        stats.rooted_sum += BigUint{static_cast<uint64_t>(n / rec.aut)};
        ++stats.aut_histogram[rec.aut];
    }
    return stats;
}

BigUint rooted_count(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    unsigned ug = static_cast<unsigned>(g);
    BigUint num = BigUint{static_cast<uint64_t>(12 * g - 6)} * BigUint::factorial(6 * ug - 4);
    BigUint den = BigUint::factorial(3 * ug - 2) * BigUint::factorial(ug) * BigUint{12}.pow(ug);
    auto [q, r] = num.divrem(den);
    if (!r.is_zero()) throw NonInteger("rooted count formula did not divide exactly");
    return q;
}

BigRat asymptotic_main_term(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    unsigned ug = static_cast<unsigned>(g);
    BigUint num = BigUint::factorial(6 * ug - 4);
    BigUint den = BigUint::factorial(3 * ug - 2) * BigUint::factorial(ug) * BigUint{12}.pow(ug);
    return BigRat{std::move(num), std::move(den)};
}

LemmaBounds lemma_bounds(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    int n = 12 * g - 6;
    LemmaBounds lb;

    BigUint prod7{1};
    for (int m = 1; n - 7 * m > 0; ++m) prod7 *= BigUint{static_cast<uint64_t>(n - 7 * m)};
    lb.b2 = BigUint{static_cast<uint64_t>(g + 1)} * prod7;
    lb.b3 = BigUint{static_cast<uint64_t>(2 * g * g)} * prod7;

    lb.b5_product = BigUint{1};
    for (int m = 1; n - 24 * (m - 1) > 0; ++m) {
        // 12g-6 is 6 or 18 mod 24, so the trailing factors stay positive
        int base = n - 24 * (m - 1);
        lb.b5_product *= BigUint{static_cast<uint64_t>(base)} *
                         BigUint{static_cast<uint64_t>(base - 2)} *
                         BigUint{static_cast<uint64_t>(base - 4)};
    }

    lb.bk = BigUint::factorial(static_cast<unsigned>(n / 7));
    return lb;
}

bool BoundReport::all_pass() const {
    for (const BoundCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

BoundReport check_bounds(const CensusStats& stats) {
    BoundReport rep;
    rep.genus = stats.genus;
    int g = stats.genus;
    int n = 12 * g - 6;
    BigUint r = rooted_count(g);
    BigRat main = asymptotic_main_term(g);
    BigUint count{static_cast<uint64_t>(stats.class_count)};

    rep.checks.push_back({"lower_bound",
                          main <= BigRat{count, BigUint{1}},
                          main.str() + " <= " + count.str()});
    rep.checks.push_back({"upper_bound", count <= r, count.str() + " <= " + r.str()});
    rep.checks.push_back({"rooted_sum_identity", stats.rooted_sum == r,
                          stats.rooted_sum.str() + " == " + r.str()});

    long n1 = 0;
    if (auto it = stats.aut_histogram.find(1); it != stats.aut_histogram.end()) n1 = it->second;
    BigUint n1_scaled = BigUint{static_cast<uint64_t>(n1)} * BigUint{static_cast<uint64_t>(n)};
    rep.checks.push_back({"trivial_aut_bound", n1_scaled <= r,
                          std::to_string(n1) + " * " + std::to_string(n) + " <= " + r.str()});
    return rep;
}

BoundReport check_aut_histogram(const CensusStats& stats) {
    BoundReport rep;
    rep.genus = stats.genus;
    int g = stats.genus;
    int n = 12 * g - 6;
    LemmaBounds lb = lemma_bounds(g);
    BigUint r = rooted_count(g);

    BigUint n2{static_cast<uint64_t>(stats.count_aut_multiple_of(2))};
    BigUint n3{static_cast<uint64_t>(stats.count_aut_multiple_of(3))};
    rep.checks.push_back({"order2_bound", n2 <= lb.b2, n2.str() + " <= " + lb.b2.str()});
    rep.checks.push_back({"order3_bound", n3 <= lb.b3, n3.str() + " <= " + lb.b3.str()});

    bool divide_ok = true;
    for (const auto& [order, count] : stats.aut_histogram)
        if (order <= 0 || n % order != 0) divide_ok = false;
    rep.checks.push_back({"orders_divide", divide_ok, "every aut order divides " + std::to_string(n)});

    BigUint nontrivial_scaled =
        BigUint{static_cast<uint64_t>(stats.count_nontrivial())} * BigUint{static_cast<uint64_t>(n)};
    rep.checks.push_back({"nontrivial_below_main_term", nontrivial_scaled < r,
                          std::to_string(stats.count_nontrivial()) + " * " + std::to_string(n) +
                              " < " + r.str()});
    return rep;
}

} // namespace wicks
