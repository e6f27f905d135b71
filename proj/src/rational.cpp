#include "quatpoly/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "quatpoly/error.hpp"
#include "quatpoly/scalar.hpp"

namespace quatpoly {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::IrrationalRepresentative: return "IrrationalRepresentative";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateEvaluations: return "DegenerateEvaluations";
    case ErrorCode::ChainBroken: return "ChainBroken";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::ClassCollision: return "ClassCollision";
    case ErrorCode::SingularUpsilon: return "SingularUpsilon";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::NeedsFloatBackend: return "NeedsFloatBackend";
    case ErrorCode::NonRealResult: return "NonRealResult";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::ZeroDivision, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::ZeroDivision, "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class n = parse_int(text.substr(0, slash));
        mpz_class d = parse_int(text.substr(slash + 1));
        if (d == 0) fail(ErrorCode::ZeroDivision, "rational with zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }
    // decimal with optional exponent
    std::string_view mant = text;
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mant = text.substr(0, e);
        auto ex = text.substr(e + 1);
        if (!ex.empty() && ex[0] == '+') ex.remove_prefix(1);
        auto [p, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), exp10);
        if (ec != std::errc() || p != ex.data() + ex.size())
            fail(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
    }
    std::string digits;
    bool neg = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        mant.remove_prefix(1);
    }
    auto dot = mant.find('.');
    if (dot != std::string_view::npos) {
        digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    } else {
        digits = std::string(mant);
    }
    if (!all_digits(digits)) fail(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
    mpq_class q(mpz_class(digits, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0) q /= p10;
    else q *= p10;
    q.canonicalize();
    return Rational(neg ? mpq_class(-q) : q);
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) fail(ErrorCode::PreconditionViolated, "non-finite value");
    return Rational(mpq_class(d));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> ScalarOps<Rational>::sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::string ScalarOps<double>::to_string(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

} // namespace quatpoly
