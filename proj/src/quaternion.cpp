#include "quatpoly/quaternion.hpp"

#include <array>
#include <optional>

namespace quatpoly {

namespace {

mpz_class isqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const mpz_class& n, mpz_class& root) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
    root = isqrt(n);
    return true;
}

// p prime, p = 1 mod 4: p = u^2 + v^2 (Cornacchia with a square root of -1).
std::optional<std::array<mpz_class, 2>> two_squares_prime(const mpz_class& p) {
    if (p == 2) return std::array<mpz_class, 2>{1, 1};
    mpz_class e = (p - 1) / 4, x, minus1 = p - 1;
    for (unsigned long c = 2; c < 1000; ++c) {
        mpz_class base(c), t;
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        mpz_class t2 = (t * t) % p;
        if (t2 == minus1) { x = t; break; }
    }
    if (x == 0) return std::nullopt;
    mpz_class a = p, b = x;
    while (b * b > p) {
        mpz_class r = a % b;
        a = b;
        b = r;
    }
    mpz_class v;
    if (!is_square(p - b * b, v)) return std::nullopt;
    return std::array<mpz_class, 2>{b, v};
}

// Representation of r >= 0 as a sum of two squares, for the easy shapes
// r = square, r = prime, r = 2 * prime.
std::optional<std::array<mpz_class, 2>> two_squares_easy(const mpz_class& r) {
    mpz_class s;
    if (is_square(r, s)) return std::array<mpz_class, 2>{s, 0};
    if (r % 4 == 1 && mpz_probab_prime_p(r.get_mpz_t(), 25))
        return two_squares_prime(r);
    if (r % 8 == 2) {
        mpz_class h = r / 2;
        if (mpz_probab_prime_p(h.get_mpz_t(), 25)) {
            auto uv = two_squares_prime(h);
            if (!uv) return std::nullopt;
            mpz_class u = (*uv)[0], v = (*uv)[1];
            return std::array<mpz_class, 2>{u + v, abs(u - v)};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::array<mpz_class, 3>> three_squares(const mpz_class& n_in) {
    if (n_in < 0) return std::nullopt;
    if (n_in == 0) return std::array<mpz_class, 3>{0, 0, 0};
    mpz_class n = n_in, scale = 1;
    while (n % 4 == 0) { n /= 4; scale *= 2; }
    if (n % 8 == 7) return std::nullopt;

    auto scaled = [&](mpz_class a, mpz_class b, mpz_class c) {
        return std::array<mpz_class, 3>{a * scale, b * scale, c * scale};
    };

    mpz_class top = isqrt(n);
    if (n < 1000000) {
        for (mpz_class a = top; a >= 0; --a) {
            mpz_class r = n - a * a;
            for (mpz_class b = isqrt(r); 2 * b * b >= r; --b) {
                mpz_class c;
                if (is_square(r - b * b, c)) return scaled(a, b, c);
                if (b == 0) break;
            }
        }
        return std::nullopt;
    }

    // n = 3 mod 8 wants a odd (r = 2 mod 8), 1,5 mod 8 wants a even,
    // 2,6 mod 8 wants a odd; in every case r lands in an easy shape often.
    unsigned long m8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
    int parity = (m8 == 1 || m8 == 5) ? 0 : 1;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        mpz_class a = attempt < 64 ? mpz_class(top - attempt) : mpz_class(rng.get_z_range(top + 1));
        if (mpz_fdiv_ui(a.get_mpz_t(), 2) != static_cast<unsigned long>(parity)) {
            if (a == 0) continue;
            a -= 1;
        }
        mpz_class r = n - a * a;
        if (auto bc = two_squares_easy(r)) return scaled(a, (*bc)[0], (*bc)[1]);
    }
    return std::nullopt;
}

template <>
Quat<Rational> class_point(const ConjugacyClass<Rational>& v) {
    Rational half = v.trace / Rational(2);
    if (v.is_real) return Quat<Rational>(half);
    Rational d = v.imag_norm2();
    if (auto m = ScalarOps<Rational>::sqrt(d)) return {half, *m, 0, 0};
    mpz_class n = d.num() * d.den();
    auto abc = three_squares(n);
    if (!abc)
        fail(ErrorCode::IrrationalRepresentative, "class contains no rational quaternion");
    Rational den(mpq_class(d.den()));
    return {half, Rational(mpq_class((*abc)[0])) / den, Rational(mpq_class((*abc)[1])) / den,
            Rational(mpq_class((*abc)[2])) / den};
}

template <>
Quat<double> class_point(const ConjugacyClass<double>& v) {
    return class_representative(v);
}

template <class S>
bool validate_spherical_chain(std::span<const Quat<S>> chain, const Tolerance& tol) {
    if (chain.empty()) return true;
    auto v = class_of(chain[0], tol);
    if (v.is_real) return false;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        double scale = 1.0 + chain[j].abs();
        if (chain[j].is_real(tol, scale) || !in_class(v, chain[j], tol)) return false;
        if (j + 1 < chain.size() && approx_equal(chain[j + 1], chain[j].conj(), tol, scale)) return false;
    }
    return true;
}

template bool validate_spherical_chain<Rational>(std::span<const Quat<Rational>>, const Tolerance&);
template bool validate_spherical_chain<double>(std::span<const Quat<double>>, const Tolerance&);

} // namespace quatpoly
