#pragma once

#include <vector>

#include "quatpoly/polynomial.hpp"
#include "quatpoly/spherical.hpp"

namespace quatpoly {

// Monic indecomposable polynomial given by its spherical chain. A real
// class carries the chain (x, ..., x).
template <class S>
struct IndecomposableFactor {
    ConjugacyClass<S> cls;
    std::vector<Quat<S>> chain;
    QPolynomial<S> poly;

    std::size_t degree() const { return chain.size(); }
};

template <class S>
IndecomposableFactor<S> make_indecomposable(std::vector<Quat<S>> chain, const Tolerance& tol = {});

// X_V^kappa * rho_{a_1} ... rho_{a_n}; for a real class kappa = 0 and the
// chain is (x, ..., x).
template <class S>
struct PrescribedDivisor {
    ConjugacyClass<S> cls;
    std::size_t kappa = 0;
    std::vector<Quat<S>> chain;

    QPolynomial<S> polynomial() const;
    std::size_t degree() const { return 2 * kappa + chain.size(); }
};

template <class S>
PrescribedDivisor<S> left_prescribed(const SphericalDivisorPair<S>& d) {
    return {d.cls, d.kappa, d.left_chain};
}

// lrcm of two left-coprime members of one class: X_V^k rho_{a_1}..rho_{a_{n-k}}.
template <class S>
QPolynomial<S> lrcm_same_class_coprime(const IndecomposableFactor<S>& g, const IndecomposableFactor<S>& h,
                                       const Tolerance& tol = {});
// llcm of two right-coprime members: X_V^k rho_{a_{k+1}}..rho_{a_n}.
template <class S>
QPolynomial<S> llcm_same_class_coprime(const IndecomposableFactor<S>& g, const IndecomposableFactor<S>& h,
                                       const Tolerance& tol = {});

// Greatest common left divisor: the longest prefix of g's chain that
// left-divides h.
template <class S>
IndecomposableFactor<S> glcd_indecomposable(const IndecomposableFactor<S>& g, const IndecomposableFactor<S>& h,
                                            const Tolerance& tol = {});

// lrcm of indecomposables in one class, as X_V^k times a prefix of the
// longest chain.
template <class S>
PrescribedDivisor<S> lrcm_indecomposable_family(const std::vector<IndecomposableFactor<S>>& family,
                                                const Tolerance& tol = {});

// lrcm of members of one class given in normal form.
template <class S>
PrescribedDivisor<S> lrcm_same_class(const std::vector<PrescribedDivisor<S>>& members, const Tolerance& tol = {});

template <class S>
struct CrossClassLcm {
    QPolynomial<S> lcm;                 // F Q_k
    QPolynomial<S> lcm_via_q;           // Q rho_{t_1} ... rho_{t_k}
    std::vector<Quat<S>> tail_chain;    // t_1 .. t_k
    QPolynomial<S> q_k;
};

// lrcm(F, Q) for F indecomposable in V and Q without zeros in V.
template <class S>
CrossClassLcm<S> lrcm_cross_class(const IndecomposableFactor<S>& F, const QPolynomial<S>& Q,
                                  const Tolerance& tol = {});

template <class S>
QPolynomial<S> lrcm_distinct_classes(const std::vector<IndecomposableFactor<S>>& factors, const Tolerance& tol = {});

template <class S>
QPolynomial<S> synthesize_from_divisors(const std::vector<PrescribedDivisor<S>>& divisors, const Tolerance& tol = {});

template <class S>
struct LcmResult {
    QPolynomial<S> result;
    std::vector<Quat<S>> units;            // input_j = monic_j * units[j]
    std::vector<QPolynomial<S>> quotients; // result = input_j * q_j (right), q_j * input_j (left)
};

template <class S>
LcmResult<S> lrcm_general(const std::vector<QPolynomial<S>>& polys, const Tolerance& tol = {});
template <class S>
LcmResult<S> llcm_general(const std::vector<QPolynomial<S>>& polys, const Tolerance& tol = {});

} // namespace quatpoly
