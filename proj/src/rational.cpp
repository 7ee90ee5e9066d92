#include "hirzlog/rational.hpp"

#include <numeric>

#include "hirzlog/checked.hpp"

namespace hirzlog {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
    return {checked::add(checked::mul(num_, o.den_), checked::mul(o.num_, den_)), checked::mul(den_, o.den_)};
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return {checked::mul(num_, o.num_), checked::mul(den_, o.den_)};
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked::neg(num_);
    r.den_ = den_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return checked::mul(num_, o.den_) <=> checked::mul(o.num_, den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace hirzlog
