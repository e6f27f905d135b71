#include "quatpoly/series.hpp"

#include <algorithm>
#include <cmath>

namespace quatpoly {

template <class S>
double max_abs_diff(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    double m = 0;
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) m = std::max(m, (a[k] - b[k]).abs());
    return m;
}

template <class S>
TruncatedSeries<S> cauchy_kernel(const Quat<S>& alpha, std::size_t order) {
    TruncatedSeries<S> s(order);
    Quat<S> p(S(1));
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = p;
        p = p * alpha;
    }
    return s;
}

template <class S>
TruncatedSeries<S> blaschke_factor(const Quat<S>& alpha, std::size_t order) {
    TruncatedSeries<S> s(order);
    s[0] = -alpha;
    S w = S(1) - alpha.norm2();
    Quat<S> p(w), ab = alpha.conj();
    for (std::size_t k = 1; k <= order; ++k) {
        s[k] = p;
        p = p * ab;
    }
    return s;
}

template <class S>
Quat<S> series_eval_left(const TruncatedSeries<S>& s, const Quat<S>& gamma) {
    Quat<S> acc = s[s.order()];
    for (std::size_t k = s.order(); k-- > 0;) acc = s[k] + gamma * acc;
    return acc;
}

template <class S>
Quat<S> series_eval_right(const TruncatedSeries<S>& s, const Quat<S>& gamma) {
    Quat<S> acc = s[s.order()];
    for (std::size_t k = s.order(); k-- > 0;) acc = s[k] + acc * gamma;
    return acc;
}

template <class S>
Quat<S> kernel_eval(const Quat<S>& alpha, const Quat<S>& gamma, Side side, const Tolerance& tol) {
    Quat<S> one(S(1));
    Quat<S> u = one - gamma * alpha.trace() + gamma * gamma * alpha.norm2();
    if (u.is_zero(tol)) fail(ErrorCode::SingularUpsilon, "1 - 2Re(a) g + |a|^2 g^2 vanishes");
    Quat<S> ab = alpha.conj();
    if (side == Side::Left) return u.inverse() * (one - gamma * ab);
    return (one - ab * gamma) * u.inverse();
}

template <class S>
std::pair<S, S> norm_preservation_check(const Quat<S>& alpha, const Quat<S>& d, const Quat<S>& c, std::size_t k) {
    if (k == 0) fail(ErrorCode::PreconditionViolated, "norm check needs k >= 1");
    S a2 = alpha.norm2(), w = S(1) - a2, d2 = d.norm2();
    Quat<S> ab = alpha.conj();
    Quat<S> abk1(S(1));
    for (std::size_t t = 0; t + 1 < k; ++t) abk1 = abk1 * ab;
    Quat<S> abk = abk1 * ab;
    S a2k1(1);
    for (std::size_t t = 0; t + 1 < k; ++t) a2k1 = a2k1 * a2;
    S lhs = a2 * d2 + w * (S(1) - a2k1) * d2 + (abk1 * d * w - alpha * c).norm2() + w * (abk * d + c).norm2();
    return {lhs, c.norm2() + d2};
}

namespace {

template <class S>
Quat<S> renormalize(const Quat<S>& q, double& drift) {
    if constexpr (ScalarOps<S>::exact) {
        return q;
    } else {
        double n = q.abs();
        drift = std::max(drift, std::fabs(n - 1.0));
        return q / n;
    }
}

} // namespace

template <class S>
BlaschkeCompletion<S> complete_to_blaschke(const std::vector<Quat<S>>& roots, const Tolerance& tol) {
    for (const auto& a : roots)
        if (!(a.norm2() < S(1))) fail(ErrorCode::PreconditionViolated, "roots must lie in the open unit ball");

    // Real roots and adjacent conjugate pairs give central factors; they are
    // split off first and only the remaining core goes through the recursion.
    std::vector<Quat<S>> central_b, central_g, core;
    for (const auto& a : roots) {
        if (a.is_real(tol, 1.0)) {
            Quat<S> x(a.x0);
            central_b.push_back(x);
            central_g.push_back(x);
        } else if (!core.empty() && approx_equal(core.back(), a.conj(), tol)) {
            Quat<S> b = core.back();
            core.pop_back();
            central_b.push_back(b);
            central_b.push_back(a);
            central_g.push_back(b);
            central_g.push_back(a);
        } else {
            core.push_back(a);
        }
    }

    BlaschkeCompletion<S> out;
    out.central = central_b.size();
    Quat<S> one(S(1));
    Quat<S> phi = one;
    std::vector<Quat<S>> delta; // betas of the previous step
    std::vector<Quat<S>> gammas;
    for (std::size_t m = 1; m <= core.size(); ++m) {
        Quat<S> am = core[m - 1];
        Quat<S> a = am, ph = one;
        std::vector<Quat<S>> beta;
        for (std::size_t k = 1; k < m; ++k) {
            const Quat<S>& dk = delta[k - 1];
            Quat<S> pinv = ph.inverse();
            Quat<S> conj_d = pinv * dk * ph;
            Quat<S> piv = one - a.conj() * conj_d;
            if (piv.is_zero(tol)) fail(ErrorCode::SingularPivot, "pivot 1 - conj(a) phi^{-1} delta phi vanishes");
            Quat<S> pinv_piv = piv.inverse();
            Quat<S> a_next = piv * a * pinv_piv;
            Quat<S> ph_next = renormalize(ph * (one - conj_d * a.conj()) * pinv_piv, out.phase_drift);
            Quat<S> b = piv * conj_d * pinv_piv;
            out.steps.push_back({m, k, dk, ph, a, ph_next, a_next, b});
            beta.push_back(b);
            a = a_next;
            ph = ph_next;
        }
        beta.push_back(a.conj());
        Quat<S> psi = renormalize(phi * ph, out.phase_drift);
        Quat<S> g = psi * a * psi.inverse();
        if (!am.is_exact_zero() && !g.is_exact_zero())
            out.phase_check = std::max(out.phase_check, (psi - g.inverse() * phi * am).abs());
        gammas.push_back(g);
        phi = psi;
        delta = std::move(beta);
    }

    out.betas = central_b;
    out.betas.insert(out.betas.end(), delta.begin(), delta.end());
    out.gammas = central_g;
    out.gammas.insert(out.gammas.end(), gammas.begin(), gammas.end());
    out.phase = phi;
    return out;
}

template <class S>
QPolynomial<S> step_lhs(const BlaschkeStep<S>& s) {
    Quat<S> one(S(1));
    return QPolynomial<S>({one, -s.delta}) * QPolynomial<S>::constant(s.phi) * rho(s.a);
}

template <class S>
QPolynomial<S> step_rhs(const BlaschkeStep<S>& s) {
    Quat<S> one(S(1));
    return QPolynomial<S>::constant(s.phi_next) * rho(s.a_next) * QPolynomial<S>({one, -s.beta});
}

template <class S>
std::pair<TruncatedSeries<S>, TruncatedSeries<S>> blaschke_identity_sides(const std::vector<Quat<S>>& roots,
                                                                         const BlaschkeCompletion<S>& c,
                                                                         std::size_t order) {
    auto lhs = TruncatedSeries<S>::from_polynomial(chain_product<S>(roots), order);
    for (const auto& b : c.betas) lhs = lhs * cauchy_kernel(b, order);
    auto rhs = TruncatedSeries<S>::one(order);
    for (const auto& g : c.gammas) rhs = rhs * blaschke_factor(g, order);
    rhs = rhs * c.phase;
    return {lhs, rhs};
}

#define QUATPOLY_INSTANTIATE(S)                                                                             \
    template double max_abs_diff(const TruncatedSeries<S>&, const TruncatedSeries<S>&);                     \
    template TruncatedSeries<S> cauchy_kernel(const Quat<S>&, std::size_t);                                 \
    template TruncatedSeries<S> blaschke_factor(const Quat<S>&, std::size_t);                               \
    template Quat<S> series_eval_left(const TruncatedSeries<S>&, const Quat<S>&);                           \
    template Quat<S> series_eval_right(const TruncatedSeries<S>&, const Quat<S>&);                          \
    template Quat<S> kernel_eval(const Quat<S>&, const Quat<S>&, Side, const Tolerance&);                   \
    template std::pair<S, S> norm_preservation_check(const Quat<S>&, const Quat<S>&, const Quat<S>&,        \
                                                     std::size_t);                                          \
    template BlaschkeCompletion<S> complete_to_blaschke(const std::vector<Quat<S>>&, const Tolerance&);     \
    template QPolynomial<S> step_lhs(const BlaschkeStep<S>&);                                               \
    template QPolynomial<S> step_rhs(const BlaschkeStep<S>&);                                               \
    template std::pair<TruncatedSeries<S>, TruncatedSeries<S>> blaschke_identity_sides(                     \
        const std::vector<Quat<S>>&, const BlaschkeCompletion<S>&, std::size_t);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
