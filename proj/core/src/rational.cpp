#include "fairrank/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fairrank {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ <= 0) throw std::invalid_argument("rational: denominator must be positive");
    if (num_ < 0) throw std::invalid_argument("rational: numerator must be non-negative");
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto parse_ll = [&](const std::string& part) -> long long {
        if (part.empty()) throw std::invalid_argument("rational: empty number in '" + text + "'");
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("rational: malformed number in '" + text + "'");
        }
        if (pos != part.size()) throw std::invalid_argument("rational: trailing characters in '" + text + "'");
        return v;
    };
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_ll(text), 1);
    return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

long long Rational::floor_mul(long long k) const {
    if (k < 0) throw std::invalid_argument("rational: floor_mul requires k >= 0");
    return static_cast<long long>(static_cast<__int128>(num_) * k / den_);
}

long long Rational::ceil_mul(long long k) const {
    if (k < 0) throw std::invalid_argument("rational: ceil_mul requires k >= 0");
    return static_cast<long long>((static_cast<__int128>(num_) * k + den_ - 1) / den_);
}

int Rational::compare_mul(long long k, long long c) const {
    __int128 lhs = static_cast<__int128>(num_) * k;
    __int128 rhs = static_cast<__int128>(c) * den_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fairrank
