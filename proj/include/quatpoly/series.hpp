#pragma once

#include <utility>
#include <vector>

#include "quatpoly/polynomial.hpp"

namespace quatpoly {

// Power series sum_k z^k c_k kept to order N (N+1 coefficients).
template <class S>
class TruncatedSeries {
public:
    using Q = Quat<S>;

    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
    TruncatedSeries(std::vector<Q> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = Q(S(1));
        return s;
    }
    static TruncatedSeries from_polynomial(const QPolynomial<S>& f, std::size_t order) {
        std::vector<Q> v(f.coeffs().begin(), f.coeffs().end());
        if (v.size() > order + 1) v.resize(order + 1);
        return TruncatedSeries(std::move(v), order);
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<Q>& coeffs() const { return c_; }
    const Q& operator[](std::size_t k) const { return c_[k]; }
    Q& operator[](std::size_t k) { return c_[k]; }

    TruncatedSeries truncated(std::size_t order) const { return TruncatedSeries(c_, order); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            for (std::size_t j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Q& q) {
        TruncatedSeries r = a;
        for (auto& c : r.c_) c = c * q;
        return r;
    }
    friend TruncatedSeries operator*(const Q& q, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& c : r.c_) c = q * c;
        return r;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Q> c_;
};

template <class S>
double max_abs_diff(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b);

// k_a = sum a^k z^k
template <class S>
TruncatedSeries<S> cauchy_kernel(const Quat<S>& alpha, std::size_t order);

// b_a = rho_a k_{conj a}: -a, then (1-|a|^2) conj(a)^{k-1}.
template <class S>
TruncatedSeries<S> blaschke_factor(const Quat<S>& alpha, std::size_t order);

template <class S>
Quat<S> series_eval_left(const TruncatedSeries<S>& s, const Quat<S>& gamma);
template <class S>
Quat<S> series_eval_right(const TruncatedSeries<S>& s, const Quat<S>& gamma);

// Closed form of k_a evaluated at gamma:
// left  U^{-1} (1 - gamma conj a), right (1 - conj a gamma) U^{-1},
// U = 1 - (a + conj a) gamma + |a|^2 gamma^2.
template <class S>
Quat<S> kernel_eval(const Quat<S>& alpha, const Quat<S>& gamma, Side side, const Tolerance& tol = {});

// ||b_a h||^2 in closed form for h = d + c z^k (k >= 1), and |c|^2 + |d|^2.
template <class S>
std::pair<S, S> norm_preservation_check(const Quat<S>& alpha, const Quat<S>& d, const Quat<S>& c, std::size_t k);

// One inner step: (1 - z delta) phi (z - a) = phi_next (z - a_next) (1 - z beta).
template <class S>
struct BlaschkeStep {
    std::size_t outer = 0; // m
    std::size_t inner = 0; // k
    Quat<S> delta, phi, a, phi_next, a_next, beta;
};

template <class S>
struct BlaschkeCompletion {
    std::vector<Quat<S>> betas;
    std::vector<Quat<S>> gammas;
    Quat<S> phase{S(1)};
    std::vector<BlaschkeStep<S>> steps;
    std::size_t central = 0;       // leading betas/gammas coming from real roots and conjugate pairs
    double phase_drift = 0;        // largest | |phi| - 1 | seen before renormalization
    double phase_check = 0;        // | psi - gamma_m^{-1} phi a_m | over the outer steps
};

// rho_{a_1}...rho_{a_m} k_{b_1}...k_{b_m} = b_{g_1}...b_{g_m} psi for roots in the open unit ball.
template <class S>
BlaschkeCompletion<S> complete_to_blaschke(const std::vector<Quat<S>>& roots, const Tolerance& tol = {});

template <class S>
QPolynomial<S> step_lhs(const BlaschkeStep<S>& s);
template <class S>
QPolynomial<S> step_rhs(const BlaschkeStep<S>& s);

// Both sides of the completion identity to the given order.
template <class S>
std::pair<TruncatedSeries<S>, TruncatedSeries<S>> blaschke_identity_sides(const std::vector<Quat<S>>& roots,
                                                                         const BlaschkeCompletion<S>& c,
                                                                         std::size_t order);

} // namespace quatpoly
