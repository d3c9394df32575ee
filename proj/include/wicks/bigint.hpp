#ifndef WICKS_BIGINT_HPP
#define WICKS_BIGINT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wicks {

// Minimal unsigned arbitrary-precision integer, base 2^32. Covers what the
// counting formulas need: factorials, products, exact division, comparison.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint from_decimal(const std::string& s);
    static BigUint factorial(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    int compare(const BigUint& o) const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o); // requires *this >= o
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    // quotient and remainder; throws std::domain_error on division by zero
    std::pair<BigUint, BigUint> divrem(const BigUint& o) const;
    BigUint operator/(const BigUint& o) const { return divrem(o).first; }
    BigUint operator%(const BigUint& o) const { return divrem(o).second; }

    BigUint pow(unsigned e) const;
    static BigUint gcd(BigUint a, BigUint b);

    std::string str() const;
    uint64_t to_u64() const; // throws std::overflow_error if too large

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

private:
    std::vector<uint32_t> limbs_; // little-endian, no trailing zeros
    void trim();
    void shift_left_bit();
};

// Non-negative rational, kept reduced.
struct BigRat {
    BigUint num;
    BigUint den{1};

    BigRat() = default;
    BigRat(BigUint n, BigUint d);

    std::string str() const; // "n/d", or "n" when d == 1

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num == b.num && a.den == b.den;
    }
    // a <= b  <=>  a.num * b.den <= b.num * a.den
    friend bool operator<=(const BigRat& a, const BigRat& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator<(const BigRat& a, const BigRat& b) {
        return a.num * b.den < b.num * a.den;
    }
};

} // namespace wicks

#endif
