#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "quatpoly/lcm.hpp"
#include "quatpoly/polynomial.hpp"
#include "quatpoly/rootfind.hpp"
#include "quatpoly/text.hpp"

namespace qpt {

using namespace quatpoly;
using R = Rational;
using QR = Quat<Rational>;
using PR = QPolynomial<Rational>;
using QD = Quat<double>;
using PD = QPolynomial<double>;

inline PR P(const char* s) { return parse_polynomial<R>(s); }
inline QR Q(const char* s) { return parse_quaternion<R>(s); }
inline PD PF(const char* s) { return parse_polynomial<double>(s); }
inline QD QF(const char* s) { return parse_quaternion<double>(s); }

inline const Tolerance kExact{0};

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(integer(0, long(v.size()) - 1))]; }

    R rational(long max_num = 20, long max_den = 20) { return R(integer(-max_num, max_num), integer(1, max_den)); }

    QR quat(long max_num = 20, long max_den = 20) {
        return {rational(max_num, max_den), rational(max_num, max_den), rational(max_num, max_den),
                rational(max_num, max_den)};
    }

    QR nonreal_quat(long max_num = 20, long max_den = 20) {
        for (;;) {
            QR q = quat(max_num, max_den);
            if (!q.imag().is_exact_zero()) return q;
        }
    }

    QR nonzero_integer_quat(long m = 2) {
        for (;;) {
            QR h{R(integer(-m, m)), R(integer(-m, m)), R(integer(-m, m)), R(integer(-m, m))};
            if (!h.is_exact_zero()) return h;
        }
    }

    // A random point of the class of a.
    QR in_class(const QR& a) { return conjugate_by(nonzero_integer_quat(), a); }

    PR poly(std::size_t deg, long max_num = 20, long max_den = 20) {
        std::vector<QR> c;
        for (std::size_t t = 0; t <= deg; ++t) c.push_back(quat(max_num, max_den));
        while (c.back().is_exact_zero()) c.back() = quat(max_num, max_den);
        return PR(std::move(c));
    }

    QD quat_f(double r) { return {real(-r, r), real(-r, r), real(-r, r), real(-r, r)}; }

    PD poly_f(std::size_t deg, double r = 1.0) {
        std::vector<QD> c;
        for (std::size_t t = 0; t <= deg; ++t) c.push_back(quat_f(r));
        return PD(std::move(c));
    }

    // Point in the open ball of radius r with rational coordinates.
    QR ball_point(const R& r, long den = 12) {
        for (;;) {
            QR q{R(integer(-den, den), den), R(integer(-den, den), den), R(integer(-den, den), den),
                 R(integer(-den, den), den)};
            if (q.norm2() <= r * r) return q;
        }
    }
};

// Monic product of linear factors whose roots come from at most `classes`
// rational base classes; spherical factors, adjacent conjugate pairs and real
// roots are mixed in.
struct Constructed {
    PR f;
    std::vector<QR> roots;
};

inline Constructed constructed_poly(Gen& g, std::size_t max_deg, long max_num = 20, long max_den = 20,
                                    std::size_t max_classes = 3) {
    std::size_t deg = static_cast<std::size_t>(g.integer(1, long(max_deg)));
    std::size_t nclasses = static_cast<std::size_t>(g.integer(1, long(max_classes)));
    std::vector<QR> bases;
    for (std::size_t c = 0; c < nclasses; ++c)
        bases.push_back(g.coin(0.15) ? QR(g.rational(max_num, max_den)) : g.nonreal_quat(max_num, max_den));
    std::vector<QR> roots;
    while (roots.size() < deg) {
        QR b = g.pick(bases);
        QR a = b.imag().is_exact_zero() ? b : g.in_class(b);
        roots.push_back(a);
        // occasionally follow with the conjugate, producing a spherical factor
        if (roots.size() < deg && !a.imag().is_exact_zero() && g.coin(0.2)) roots.push_back(a.conj());
    }
    return {chain_product<R>(roots), roots};
}

// Rank of a rational matrix (rows of equal length) by exact elimination.
inline std::size_t rational_rank(std::vector<std::vector<R>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            R f = m[r][c] / m[rank][c];
            for (std::size_t t = c; t < cols; ++t) m[r][t] = m[r][t] - f * m[rank][t];
        }
        ++rank;
    }
    return rank;
}

// Real dimension of {q : deg q <= e and every g_j left-divides g_0 q}.
inline std::size_t common_multiple_nullity(const std::vector<PR>& gs, std::size_t e) {
    std::size_t unknowns = 4 * (e + 1);
    std::vector<std::vector<R>> cols; // one column per basis vector, concatenated remainders
    for (std::size_t u = 0; u < unknowns; ++u) {
        std::vector<QR> c(e + 1);
        QR unit[4] = {QR(R(1)), QR::i(), QR::j(), QR::k()};
        c[u / 4] = unit[u % 4];
        PR h = gs[0] * PR(c);
        std::vector<R> col;
        for (std::size_t j = 1; j < gs.size(); ++j) {
            auto r = divide_right(h, gs[j], kExact).remainder;
            std::size_t n = gs[j].deg0();
            for (std::size_t t = 0; t < n; ++t) {
                QR q = r.coeff(t);
                col.insert(col.end(), {q.x0, q.x1, q.x2, q.x3});
            }
        }
        cols.push_back(std::move(col));
    }
    if (cols[0].empty()) return unknowns;
    std::vector<std::vector<R>> rows(cols[0].size(), std::vector<R>(unknowns));
    for (std::size_t u = 0; u < unknowns; ++u)
        for (std::size_t r = 0; r < cols[u].size(); ++r) rows[r][u] = cols[u][r];
    return unknowns - rational_rank(std::move(rows));
}

inline bool left_divides(const PR& g, const PR& f) { return divide_right(f, g, kExact).remainder.is_zero(); }
inline bool right_divides(const PR& g, const PR& f) { return divide_left(f, g, kExact).remainder.is_zero(); }

} // namespace qpt
