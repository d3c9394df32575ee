#ifndef WICKS_CENSUS_HPP
#define WICKS_CENSUS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wicks/bigint.hpp"
#include "wicks/canonical.hpp"

namespace wicks {

// One census row, as persisted in the JSON-lines census files.
struct CensusRecord {
    int genus = 0;
    std::string canon;
    int aut = 1;
    int V = 0;
    int E = 0;
    int F = 1;
};

std::string to_json_line(const CensusRecord& rec);
CensusRecord census_record_from_json(const std::string& line);

std::vector<CensusRecord> census_records(const std::vector<CanonicalClass>& classes);
std::vector<CensusRecord> read_census(std::istream& in);
void write_census(std::ostream& out, const std::vector<CensusRecord>& recs);

// Aggregate statistics of one enumerated genus.
struct CensusStats {
    int genus = 0;
    long class_count = 0;                 // N(1,g)
    BigUint rooted_sum;                   // sum over classes of (12g-6)/aut
    std::map<int, long> aut_histogram;    // aut order -> class count

    long count_aut_multiple_of(int k) const; // classes with an order-k element
    long count_nontrivial() const;           // classes with aut order >= 2
};

// Throws NonInteger if some aut order fails to divide 12g-6.
CensusStats census_stats(const std::vector<CensusRecord>& recs, int genus);

// R(g) = (12g-6)(6g-4)! / ((3g-2)! g! 12^g), exactly.
// Throws NonInteger if the division were inexact (cannot happen).
BigUint rooted_count(int g);

// (6g-4)! / ((3g-2)! g! 12^g) as an exact rational: R(g)/(12g-6).
BigRat asymptotic_main_term(int g);

struct LemmaBounds {
    BigUint b2;         // (g+1) * prod of (12g-6-7m) while positive
    BigUint b3;         // 2 g^2 * the same product
    BigUint b5_product; // prod of (12g-6-24(m-1))(12g-8-24(m-1))(12g-10-24(m-1))
    BigUint bk;         // floor((12g-6)/7)!
};

LemmaBounds lemma_bounds(int g);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BoundReport {
    int genus = 0;
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

// The counting identities and inequalities against an enumerated census:
// lower/upper bounds on N(1,g), the exact rooted-sum identity, and the
// trivial-automorphism bound.
BoundReport check_bounds(const CensusStats& stats);

// Finite-genus versions of the automorphism estimates: N2 <= B2, N3 <= B3,
// every aut order divides 12g-6, and the nontrivial classes stay below
// R(g)/(12g-6).
BoundReport check_aut_histogram(const CensusStats& stats);

} // namespace wicks

#endif
