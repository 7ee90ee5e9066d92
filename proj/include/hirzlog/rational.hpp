#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hirzlog {

/// Exact rational number over 64-bit integers, always stored in lowest terms
/// with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const noexcept = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hirzlog
