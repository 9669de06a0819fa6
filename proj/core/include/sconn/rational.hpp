#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace sconn {

// Exact rational arithmetic on int64 numerator/denominator.
// Always normalized: den > 0, gcd(|num|, den) = 1.
// Narrowing overflow throws std::overflow_error instead of wrapping; values
// in this domain (edge costs, path sums, PoA ratios) stay tiny.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "3", "-7", "2.1", "21/10". Whole string must match.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    // Canonical form: integer as "3", otherwise "p/q".
    std::string str() const;
    // Decimal when the denominator is a power of ten ("2.1"), else str().
    std::string decimal_or_fraction() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace sconn
