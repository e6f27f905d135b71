#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quatpoly {

// Exact rational number on top of GMP. Kept as a plain value type so that
// generic code never sees gmpxx expression templates.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "p/q", "-1.25", "3e-2". Decimals are converted exactly.
    static Rational parse(std::string_view text);
    static Rational from_double(double d);

    const mpq_class& mpq() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_{0};
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace quatpoly
