#include "wicks/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace wicks {

BigUint::BigUint(uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(o) < 0) throw std::domain_error("BigUint subtraction would be negative");
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = borrow + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        if (limbs_[i] >= sub) {
            limbs_[i] = static_cast<uint32_t>(limbs_[i] - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<uint32_t>((uint64_t{1} << 32) + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return {};
    BigUint out;
    out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = out.limbs_[i + j] +
                           static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

void BigUint::shift_left_bit() {
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

std::pair<BigUint, BigUint> BigUint::divrem(const BigUint& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (compare(o) < 0) return {BigUint{}, *this};

    // binary long division, msb to lsb
    BigUint q, r;
    size_t bits = limbs_.size() * 32;
    q.limbs_.assign(limbs_.size(), 0);
    for (size_t b = bits; b-- > 0;) {
        r.shift_left_bit();
        if ((limbs_[b / 32] >> (b % 32)) & 1u) {
            if (r.limbs_.empty()) r.limbs_.push_back(1);
            else r.limbs_[0] |= 1u;
        }
        if (r.compare(o) >= 0) {
            r -= o;
            q.limbs_[b / 32] |= (uint32_t{1} << (b % 32));
        }
    }
    q.trim();
    r.trim();
    return {std::move(q), std::move(r)};
}

BigUint BigUint::pow(unsigned e) const {
    BigUint out{1};
    BigUint base = *this;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigUint BigUint::factorial(unsigned n) {
    BigUint out{1};
    for (unsigned i = 2; i <= n; ++i) out *= BigUint{i};
    return out;
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    BigUint out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        out = out * BigUint{10} + BigUint{static_cast<uint64_t>(c - '0')};
    }
    return out;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    const BigUint chunk{1000000000u};
    std::vector<uint32_t> groups;
    while (!cur.is_zero()) {
        auto [q, r] = cur.divrem(chunk);
        groups.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        cur = std::move(q);
    }
    out = std::to_string(groups.back());
    for (size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint does not fit in 64 bits");
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

BigRat::BigRat(BigUint n, BigUint d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    BigUint g = BigUint::gcd(num, den);
    if (!g.is_zero() && !(g == BigUint{1})) {
        num = num / g;
        den = den / g;
    }
    if (num.is_zero()) den = BigUint{1};
}

std::string BigRat::str() const {
    if (den == BigUint{1}) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace wicks
