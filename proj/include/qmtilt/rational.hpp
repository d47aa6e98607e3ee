#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qmtilt/checked.hpp"

namespace qmtilt {

// Exact rational number over checked 64-bit integers. Always normalized:
// denominator positive, gcd(num, den) == 1. The magnitudes in this project
// are tiny (node-weight fractions 1/m, small integer weights), so 64 bits
// with overflow checks is plenty.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_); }
    Rat operator+(const Rat& o) const {
        return Rat(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                   checked_mul(den_, o.den_));
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator*(const Rat& o) const {
        return Rat(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return Rat(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const {
        long long lhs = checked_mul(num_, o.den_);
        long long rhs = checked_mul(o.num_, den_);
        return lhs <=> rhs;
    }

    // "p" when integral, "p/q" otherwise; always reduced.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace qmtilt
