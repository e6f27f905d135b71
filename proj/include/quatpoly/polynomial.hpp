#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quatpoly/quaternion.hpp"

namespace quatpoly {

enum class Side { Left, Right };

const char* side_name(Side s);

// f(z) = sum_j z^j f_j, coefficients written on the right of the powers.
// Trailing exact zeros are stripped; the zero polynomial has no coefficients.
template <class S>
class QPolynomial {
public:
    using Q = Quat<S>;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<Q> coeffs) : c_(std::move(coeffs)) { normalize(); }
    QPolynomial(std::initializer_list<Q> coeffs) : c_(coeffs) { normalize(); }

    static QPolynomial constant(const Q& c) { return QPolynomial({c}); }
    static QPolynomial one() { return constant(Q(S(1))); }
    static QPolynomial monomial(std::size_t n, const Q& c = Q(S(1))) {
        std::vector<Q> v(n + 1);
        v[n] = c;
        return QPolynomial(std::move(v));
    }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    // Degree with the zero polynomial mapped to 0.
    std::size_t deg0() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    std::span<const Q> coeffs() const { return c_; }
    const Q& operator[](std::size_t k) const { return c_[k]; }
    Q coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Q(); }
    const Q& leading() const { return c_.back(); }

    bool is_monic() const { return !c_.empty() && c_.back() == Q(S(1)); }
    bool has_real_coeffs(const Tolerance& tol = {}) const;
    // Sum of coefficient moduli.
    double weight() const;
    double max_coeff() const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }

    template <class F>
    QPolynomial map(F&& fn) const {
        std::vector<Q> v;
        v.reserve(c_.size());
        for (const auto& q : c_) v.push_back(fn(q));
        return QPolynomial(std::move(v));
    }

    // Drop leading coefficients that vanish under tol (floating backend).
    QPolynomial trimmed(const Tolerance& tol, double scale) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
    }
    std::vector<Q> c_;
};

template <class S>
QPolynomial<S> operator*(const QPolynomial<S>& f, const QPolynomial<S>& g);
template <class S>
QPolynomial<S> operator*(const QPolynomial<S>& f, const Quat<S>& c);
template <class S>
QPolynomial<S> operator*(const Quat<S>& c, const QPolynomial<S>& f);

template <class S>
QPolynomial<S> power(const QPolynomial<S>& f, std::size_t n);

template <class S>
bool approx_equal(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol = {});
template <class S>
double max_abs_diff(const QPolynomial<S>& f, const QPolynomial<S>& g);

// rho_alpha = z - alpha
template <class S>
QPolynomial<S> rho(const Quat<S>& alpha) {
    return QPolynomial<S>({-alpha, Quat<S>(S(1))});
}

// X_V = z^2 - trace z + norm2
template <class S>
QPolynomial<S> characteristic(const ConjugacyClass<S>& v) {
    return QPolynomial<S>({Quat<S>(v.norm2), Quat<S>(-v.trace), Quat<S>(S(1))});
}

// rho_{g_1} rho_{g_2} ... rho_{g_n}
template <class S>
QPolynomial<S> chain_product(std::span<const Quat<S>> chain);

// f^sharp: conjugated coefficients.
template <class S>
QPolynomial<S> sharp(const QPolynomial<S>& f) {
    return f.map([](const Quat<S>& q) { return q.conj(); });
}

// f = lead * (monic); returns the monic part with the unit peeled off on the right.
template <class S>
QPolynomial<S> monic_right(const QPolynomial<S>& f) {
    return f * f.leading().inverse();
}

// sum alpha^k f_k
template <class S>
Quat<S> eval_left(const QPolynomial<S>& f, const Quat<S>& alpha);
// sum f_k alpha^k
template <class S>
Quat<S> eval_right(const QPolynomial<S>& f, const Quat<S>& alpha);

// Magnitude that evaluation round-off is measured against:
// sum |f_k| max(1,|alpha|)^k.
template <class S>
double eval_scale(const QPolynomial<S>& f, const Quat<S>& alpha);

// Left / right backward shift: f - f^{el}(a) = rho_a L_a f, and
// f - f^{br}(a) = (R_a f) rho_a.
template <class S>
QPolynomial<S> shift_left(const QPolynomial<S>& f, const Quat<S>& alpha);
template <class S>
QPolynomial<S> shift_right(const QPolynomial<S>& f, const Quat<S>& alpha);

template <class S>
struct DivResult {
    QPolynomial<S> quotient;
    QPolynomial<S> remainder;
};

// f = g q + r with deg r < deg g.
template <class S>
DivResult<S> divide_right(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol = {});
// f = q g + r with deg r < deg g.
template <class S>
DivResult<S> divide_left(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol = {});

// Formal derivative of order k (coefficient f_j j!/(j-k)!).
template <class S>
QPolynomial<S> derivative(const QPolynomial<S>& f, std::size_t k = 1);

// Largest k with rho_a^k dividing f on the left / right.
template <class S>
std::size_t mult_left(const Quat<S>& alpha, const QPolynomial<S>& f, const Tolerance& tol = {});
template <class S>
std::size_t mult_right(const Quat<S>& alpha, const QPolynomial<S>& f, const Tolerance& tol = {});

// Largest kappa with X_V^kappa dividing f. Probes at a point alpha of V and
// at its conjugate; the point defaults to class_point(V).
template <class S>
std::size_t mult_spherical(const ConjugacyClass<S>& v, const QPolynomial<S>& f, const Tolerance& tol = {},
                           std::optional<Quat<S>> probe = std::nullopt);

// f f^sharp as a polynomial with real coefficients. Floating backend throws
// NonRealResult if imaginary parts exceed tolerance.
template <class S>
QPolynomial<S> companion_real(const QPolynomial<S>& f, const Tolerance& tol = {});

// (gf)^{el}(a) via g(a) f(g(a)^{-1} a g(a)).
template <class S>
Quat<S> eval_product_left(const QPolynomial<S>& g, const QPolynomial<S>& f, const Quat<S>& alpha,
                          const Tolerance& tol = {});
// (gf)^{br}(a) via g^{br}(f(a) a f(a)^{-1}) f^{br}(a).
template <class S>
Quat<S> eval_product_right(const QPolynomial<S>& g, const QPolynomial<S>& f, const Quat<S>& alpha,
                           const Tolerance& tol = {});

// Left/right value at gamma from the left values fa = f(a), fb = f(b) at two
// distinct points a, b of the class of gamma.
template <class S>
Quat<S> interpolate_left(const Quat<S>& fa, const Quat<S>& fb, const Quat<S>& a, const Quat<S>& b,
                         const Quat<S>& gamma) {
    Quat<S> d = (a - b).inverse();
    return (gamma - b) * d * fa + (a - gamma) * d * fb;
}
template <class S>
Quat<S> interpolate_right(const Quat<S>& fa, const Quat<S>& fb, const Quat<S>& a, const Quat<S>& b,
                          const Quat<S>& gamma) {
    Quat<S> d = (a - b).inverse();
    return d * fa * gamma - b * d * fa + a * d * fb - d * fb * gamma;
}

// Same with b = conj(a).
template <class S>
Quat<S> interpolate_left_conj(const Quat<S>& fa, const Quat<S>& fab, const Quat<S>& a, const Quat<S>& gamma) {
    Quat<S> ab = a.conj();
    return (gamma - gamma.conj()).inverse() * ((gamma - ab) * fa + (gamma - a) * fab);
}
template <class S>
Quat<S> interpolate_right_conj(const Quat<S>& fa, const Quat<S>& fab, const Quat<S>& a, const Quat<S>& gamma) {
    Quat<S> ab = a.conj();
    return (a - ab).inverse() * (fa * gamma - ab * fa + a * fab - fab * gamma);
}

template <class T, class S>
QPolynomial<T> convert(const QPolynomial<S>& f) {
    std::vector<Quat<T>> v;
    for (const auto& q : f.coeffs()) v.push_back(convert<T>(q));
    return QPolynomial<T>(std::move(v));
}

// Real-coefficient polynomial helpers used by the class finder.
template <class S>
std::vector<S> real_parts(const QPolynomial<S>& f);
template <class S>
QPolynomial<S> from_real(const std::vector<S>& a);

} // namespace quatpoly
