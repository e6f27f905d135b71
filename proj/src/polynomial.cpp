#include "quatpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace quatpoly {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

template <class S>
bool QPolynomial<S>::has_real_coeffs(const Tolerance& tol) const {
    double scale = std::max(1.0, max_coeff());
    return std::all_of(c_.begin(), c_.end(), [&](const Q& q) { return q.is_real(tol, scale); });
}

template <class S>
double QPolynomial<S>::weight() const {
    double w = 0;
    for (const auto& q : c_) w += q.abs();
    return w;
}

template <class S>
double QPolynomial<S>::max_coeff() const {
    double m = 0;
    for (const auto& q : c_) m = std::max(m, q.abs());
    return m;
}

template <class S>
QPolynomial<S> QPolynomial<S>::operator-() const {
    return map([](const Q& q) { return -q; });
}

template <class S>
QPolynomial<S>& QPolynomial<S>::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

template <class S>
QPolynomial<S>& QPolynomial<S>::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

template <class S>
QPolynomial<S> QPolynomial<S>::trimmed(const Tolerance& tol, double scale) const {
    std::vector<Q> v = c_;
    while (!v.empty() && v.back().is_zero(tol, scale)) v.pop_back();
    return QPolynomial(std::move(v));
}

template <class S>
QPolynomial<S> operator*(const QPolynomial<S>& f, const QPolynomial<S>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Quat<S>> v(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) v[i + j] += f[i] * g[j];
    return QPolynomial<S>(std::move(v));
}

template <class S>
QPolynomial<S> operator*(const QPolynomial<S>& f, const Quat<S>& c) {
    return f.map([&](const Quat<S>& q) { return q * c; });
}

template <class S>
QPolynomial<S> operator*(const Quat<S>& c, const QPolynomial<S>& f) {
    return f.map([&](const Quat<S>& q) { return c * q; });
}

template <class S>
QPolynomial<S> power(const QPolynomial<S>& f, std::size_t n) {
    auto r = QPolynomial<S>::one();
    for (std::size_t i = 0; i < n; ++i) r = r * f;
    return r;
}

template <class S>
double max_abs_diff(const QPolynomial<S>& f, const QPolynomial<S>& g) {
    double m = 0;
    std::size_t n = std::max(f.size(), g.size());
    for (std::size_t k = 0; k < n; ++k) m = std::max(m, (f.coeff(k) - g.coeff(k)).abs());
    return m;
}

template <class S>
bool approx_equal(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol) {
    if constexpr (ScalarOps<S>::exact) return f == g;
    else return max_abs_diff(f, g) <= tol.eps * std::max({1.0, f.max_coeff(), g.max_coeff()});
}

template <class S>
QPolynomial<S> chain_product(std::span<const Quat<S>> chain) {
    auto r = QPolynomial<S>::one();
    for (const auto& g : chain) r = r * rho(g);
    return r;
}

template <class S>
Quat<S> eval_left(const QPolynomial<S>& f, const Quat<S>& alpha) {
    if (f.is_zero()) return {};
    Quat<S> acc = f.leading();
    for (std::size_t k = f.size() - 1; k-- > 0;) acc = f[k] + alpha * acc;
    return acc;
}

template <class S>
Quat<S> eval_right(const QPolynomial<S>& f, const Quat<S>& alpha) {
    if (f.is_zero()) return {};
    Quat<S> acc = f.leading();
    for (std::size_t k = f.size() - 1; k-- > 0;) acc = f[k] + acc * alpha;
    return acc;
}

template <class S>
double eval_scale(const QPolynomial<S>& f, const Quat<S>& alpha) {
    double m = std::max(1.0, alpha.abs()), p = 1, s = 0;
    for (const auto& q : f.coeffs()) {
        s += q.abs() * p;
        p *= m;
    }
    return std::max(s, 1e-300);
}

template <class S>
QPolynomial<S> shift_left(const QPolynomial<S>& f, const Quat<S>& alpha) {
    if (f.size() <= 1) return {};
    std::size_t m = f.size() - 1;
    std::vector<Quat<S>> c(m);
    c[m - 1] = f[m];
    for (std::size_t k = m - 1; k-- > 0;) c[k] = f[k + 1] + alpha * c[k + 1];
    return QPolynomial<S>(std::move(c));
}

template <class S>
QPolynomial<S> shift_right(const QPolynomial<S>& f, const Quat<S>& alpha) {
    if (f.size() <= 1) return {};
    std::size_t m = f.size() - 1;
    std::vector<Quat<S>> c(m);
    c[m - 1] = f[m];
    for (std::size_t k = m - 1; k-- > 0;) c[k] = f[k + 1] + c[k + 1] * alpha;
    return QPolynomial<S>(std::move(c));
}

namespace {

template <class S, bool Right>
DivResult<S> divide_impl(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol) {
    if (g.is_zero()) fail(ErrorCode::ZeroDivision, "division by the zero polynomial");
    std::vector<Quat<S>> r(f.coeffs().begin(), f.coeffs().end());
    std::size_t dg = g.size() - 1;
    if (r.size() <= dg) return {{}, f};
    std::vector<Quat<S>> q(r.size() - dg);
    Quat<S> lc_inv = g.leading().inverse();
    while (r.size() > dg) {
        std::size_t d = r.size() - 1 - dg;
        Quat<S> t = Right ? lc_inv * r.back() : r.back() * lc_inv;
        q[d] = t;
        for (std::size_t k = 0; k < dg; ++k) {
            if constexpr (Right) r[d + k] -= g[k] * t;
            else r[d + k] -= t * g[k];
        }
        r.pop_back();
        if constexpr (ScalarOps<S>::exact)
            while (!r.empty() && r.back().is_exact_zero() && r.size() > dg) r.pop_back();
    }
    QPolynomial<S> rem(std::move(r));
    if constexpr (!ScalarOps<S>::exact) rem = rem.trimmed(tol, std::max(1.0, f.max_coeff()));
    return {QPolynomial<S>(std::move(q)), rem};
}

} // namespace

template <class S>
DivResult<S> divide_right(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol) {
    return divide_impl<S, true>(f, g, tol);
}

template <class S>
DivResult<S> divide_left(const QPolynomial<S>& f, const QPolynomial<S>& g, const Tolerance& tol) {
    return divide_impl<S, false>(f, g, tol);
}

template <class S>
QPolynomial<S> derivative(const QPolynomial<S>& f, std::size_t k) {
    if (f.size() <= k) return {};
    std::vector<Quat<S>> v(f.size() - k);
    for (std::size_t j = k; j < f.size(); ++j) {
        S factor(1);
        for (std::size_t t = j - k + 1; t <= j; ++t) factor = factor * S(static_cast<long>(t));
        v[j - k] = f[j] * factor;
    }
    return QPolynomial<S>(std::move(v));
}

template <class S>
std::size_t mult_left(const Quat<S>& alpha, const QPolynomial<S>& f, const Tolerance& tol) {
    if (f.is_zero()) fail(ErrorCode::PreconditionViolated, "multiplicity in the zero polynomial");
    std::size_t k = 0;
    QPolynomial<S> g = f;
    while (g.size() > 1 && eval_left(g, alpha).is_zero(tol, eval_scale(g, alpha))) {
        g = shift_left(g, alpha);
        ++k;
    }
    return k;
}

template <class S>
std::size_t mult_right(const Quat<S>& alpha, const QPolynomial<S>& f, const Tolerance& tol) {
    if (f.is_zero()) fail(ErrorCode::PreconditionViolated, "multiplicity in the zero polynomial");
    std::size_t k = 0;
    QPolynomial<S> g = f;
    while (g.size() > 1 && eval_right(g, alpha).is_zero(tol, eval_scale(g, alpha))) {
        g = shift_right(g, alpha);
        ++k;
    }
    return k;
}

template <class S>
std::size_t mult_spherical(const ConjugacyClass<S>& v, const QPolynomial<S>& f, const Tolerance& tol,
                           std::optional<Quat<S>> probe) {
    if (f.is_zero()) fail(ErrorCode::PreconditionViolated, "multiplicity in the zero polynomial");
    if (v.is_real) fail(ErrorCode::PreconditionViolated, "spherical multiplicity needs a nonreal class");
    Quat<S> a = probe ? *probe : class_point(v);
    Quat<S> b = a.conj();
    std::size_t kappa = 0;
    while (2 * kappa < f.size()) {
        auto d = derivative(f, kappa);
        if (!eval_left(d, a).is_zero(tol, eval_scale(d, a)) || !eval_left(d, b).is_zero(tol, eval_scale(d, b)))
            break;
        ++kappa;
    }
    return kappa;
}

template <class S>
QPolynomial<S> companion_real(const QPolynomial<S>& f, const Tolerance& tol) {
    auto p = f * sharp(f);
    double scale = std::max(1.0, p.max_coeff());
    std::vector<Quat<S>> v;
    for (const auto& q : p.coeffs()) {
        if (!q.is_real(tol, scale)) fail(ErrorCode::NonRealResult, "f f^sharp has non-real coefficients");
        v.emplace_back(q.x0);
    }
    return QPolynomial<S>(std::move(v));
}

template <class S>
Quat<S> eval_product_left(const QPolynomial<S>& g, const QPolynomial<S>& f, const Quat<S>& alpha,
                          const Tolerance& tol) {
    Quat<S> ga = eval_left(g, alpha);
    if (ga.is_zero(tol, eval_scale(g, alpha))) return {};
    return ga * eval_left(f, conjugate_by(ga, alpha));
}

template <class S>
Quat<S> eval_product_right(const QPolynomial<S>& g, const QPolynomial<S>& f, const Quat<S>& alpha,
                           const Tolerance& tol) {
    Quat<S> fa = eval_right(f, alpha);
    if (fa.is_zero(tol, eval_scale(f, alpha))) return {};
    return eval_right(g, fa * alpha * fa.inverse()) * fa;
}

template <class S>
std::vector<S> real_parts(const QPolynomial<S>& f) {
    std::vector<S> a;
    for (const auto& q : f.coeffs()) a.push_back(q.x0);
    return a;
}

template <class S>
QPolynomial<S> from_real(const std::vector<S>& a) {
    std::vector<Quat<S>> v;
    for (const auto& x : a) v.emplace_back(x);
    return QPolynomial<S>(std::move(v));
}

#define QUATPOLY_INSTANTIATE(S)                                                                        \
    template class QPolynomial<S>;                                                                     \
    template QPolynomial<S> operator*(const QPolynomial<S>&, const QPolynomial<S>&);                   \
    template QPolynomial<S> operator*(const QPolynomial<S>&, const Quat<S>&);                          \
    template QPolynomial<S> operator*(const Quat<S>&, const QPolynomial<S>&);                          \
    template QPolynomial<S> power(const QPolynomial<S>&, std::size_t);                                 \
    template bool approx_equal(const QPolynomial<S>&, const QPolynomial<S>&, const Tolerance&);        \
    template double max_abs_diff(const QPolynomial<S>&, const QPolynomial<S>&);                        \
    template QPolynomial<S> chain_product(std::span<const Quat<S>>);                                   \
    template Quat<S> eval_left(const QPolynomial<S>&, const Quat<S>&);                                 \
    template Quat<S> eval_right(const QPolynomial<S>&, const Quat<S>&);                                \
    template double eval_scale(const QPolynomial<S>&, const Quat<S>&);                                 \
    template QPolynomial<S> shift_left(const QPolynomial<S>&, const Quat<S>&);                         \
    template QPolynomial<S> shift_right(const QPolynomial<S>&, const Quat<S>&);                        \
    template DivResult<S> divide_right(const QPolynomial<S>&, const QPolynomial<S>&, const Tolerance&); \
    template DivResult<S> divide_left(const QPolynomial<S>&, const QPolynomial<S>&, const Tolerance&);  \
    template QPolynomial<S> derivative(const QPolynomial<S>&, std::size_t);                            \
    template std::size_t mult_left(const Quat<S>&, const QPolynomial<S>&, const Tolerance&);           \
    template std::size_t mult_right(const Quat<S>&, const QPolynomial<S>&, const Tolerance&);          \
    template std::size_t mult_spherical(const ConjugacyClass<S>&, const QPolynomial<S>&,               \
                                        const Tolerance&, std::optional<Quat<S>>);                     \
    template QPolynomial<S> companion_real(const QPolynomial<S>&, const Tolerance&);                   \
    template Quat<S> eval_product_left(const QPolynomial<S>&, const QPolynomial<S>&, const Quat<S>&,   \
                                       const Tolerance&);                                              \
    template Quat<S> eval_product_right(const QPolynomial<S>&, const QPolynomial<S>&, const Quat<S>&,  \
                                        const Tolerance&);                                             \
    template std::vector<S> real_parts(const QPolynomial<S>&);                                         \
    template QPolynomial<S> from_real(const std::vector<S>&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
