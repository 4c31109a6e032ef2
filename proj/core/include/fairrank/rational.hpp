#pragma once

#include <cstdint>
#include <string>

namespace fairrank {

// Non-negative rational number kept in lowest terms.
//
// Group quotas are fractions, and every quota comparison in this library is
// done in exact integer arithmetic: a single floor/ceil computed through
// floating point can silently flip a bound and change which rankings count
// as fair.  All products below go through 128-bit intermediates, so there is
// no overflow for any realistic numerator/denominator/prefix combination.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den);

    // Accepts "p/q" or a bare integer "p".  Throws std::invalid_argument on
    // malformed text, negative values, or a zero denominator.
    static Rational parse(const std::string& text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    // floor(this * k) and ceil(this * k) for k >= 0, exactly.
    long long floor_mul(long long k) const;
    long long ceil_mul(long long k) const;

    // True when this * k is an integer.
    bool mul_is_integral(long long k) const { return (static_cast<__int128>(num_) * k) % den_ == 0; }

    // Sign of (this * k) - c: <0, 0, >0 as the product is below, at, or
    // above the integer c.  Used for quota checks without any rounding.
    int compare_mul(long long k, long long c) const;

    // Canonical text form: "p" when the value is integral, else "p/q".
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    long long num_;  // >= 0
    long long den_;  // > 0, gcd(num_, den_) == 1
};

}  // namespace fairrank
