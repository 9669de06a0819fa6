#include "sconn/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sconn {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);

    auto parse_int = [](const std::string& part) -> std::int64_t {
        if (part.empty()) throw std::invalid_argument("bad rational literal");
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal: " + part);
        }
        if (pos != part.size()) throw std::invalid_argument("bad rational literal: " + part);
        return v;
    };

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t p = parse_int(s.substr(0, slash));
        std::int64_t q = parse_int(s.substr(slash + 1));
        return Rational(p, q);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("bad rational literal: " + s);
        for (char c : frac)
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: " + s);
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        i128 den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
            if (den > INT64_MAX) throw std::overflow_error("rational overflow");
        }
        i128 fnum = parse_int(frac.empty() ? "0" : frac);
        i128 num = (i128)(w < 0 ? -w : w) * den + fnum;
        if (neg || w < 0) num = -num;
        return make(num, den);
    }

    return Rational(parse_int(s), 1);
}

Rational Rational::operator+(const Rational& o) const {
    return make((i128)num_ * o.den_ + (i128)o.num_ * den_, (i128)den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make((i128)num_ * o.den_ - (i128)o.num_ * den_, (i128)den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make((i128)num_ * o.num_, (i128)den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return make((i128)num_ * o.den_, (i128)den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = (i128)num_ * o.den_;
    i128 rhs = (i128)o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_or_fraction() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int digits = 0;
    while (d % 10 == 0) {
        d /= 10;
        ++digits;
    }
    if (d != 1) return str();
    std::int64_t n = num_ < 0 ? -num_ : num_;
    std::string frac = std::to_string(n % den_);
    frac.insert(frac.begin(), digits - (int)frac.size(), '0');
    std::string out = (num_ < 0 ? "-" : "") + std::to_string(n / den_) + "." + frac;
    return out;
}

} // namespace sconn
