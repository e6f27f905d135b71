#pragma once

#include <optional>
#include <vector>

#include "quatpoly/polynomial.hpp"
#include "quatpoly/rootfind.hpp"

namespace quatpoly {

// Zero structure of f inside one class V:
//   f = X_V^kappa * rho_{l_1} ... rho_{l_n} * left_cofactor
//     = right_cofactor * rho_{r_n} ... rho_{r_1} * X_V^kappa
// For a real class {x}, kappa = 0 and both chains are (x, ..., x).
template <class S>
struct SphericalDivisorPair {
    ConjugacyClass<S> cls;
    std::size_t kappa = 0;
    std::vector<Quat<S>> left_chain;
    std::vector<Quat<S>> right_chain;
    QPolynomial<S> left_cofactor;
    QPolynomial<S> right_cofactor;

    QPolynomial<S> left_divisor() const;
    QPolynomial<S> right_divisor() const;
};

// rho_{r_n} ... rho_{r_1}
template <class S>
QPolynomial<S> reversed_chain_product(const std::vector<Quat<S>>& chain);

// S_V f with (S_V f)_k = sum_{i=0}^{n-k-2} r_i f_{i+k+2},
// r_0 = 1, r_1 = trace, r_{j+1} = trace r_j - norm2 r_{j-1}.
template <class S>
QPolynomial<S> spherical_shift(const QPolynomial<S>& f, const ConjugacyClass<S>& v);

template <class S>
std::vector<S> shift_recursion(const ConjugacyClass<S>& v, std::size_t count);

template <class S>
struct ChainExtraction {
    std::vector<Quat<S>> chain;
    QPolynomial<S> cofactor;
};

// f = rho_{b_1} ... rho_{b_k} * cofactor, each b_j the left zero in V of the
// running quotient.
template <class S>
ChainExtraction<S> extract_left_chain(const QPolynomial<S>& f, const ConjugacyClass<S>& v, std::size_t k,
                                      const Tolerance& tol = {}, std::optional<Quat<S>> probe = std::nullopt);
// f = cofactor * rho_{b_k} ... rho_{b_1}.
template <class S>
ChainExtraction<S> extract_right_chain(const QPolynomial<S>& f, const ConjugacyClass<S>& v, std::size_t k,
                                       const Tolerance& tol = {}, std::optional<Quat<S>> probe = std::nullopt);

template <class S>
SphericalDivisorPair<S> spherical_divisors(const QPolynomial<S>& f, const ConjugacyClass<S>& v,
                                           const Tolerance& tol = {},
                                           std::optional<Quat<S>> probe = std::nullopt);

// Divisor pairs for every class of Z(f), sorted by class.
template <class S>
std::vector<SphericalDivisorPair<S>> zero_structure(const QPolynomial<S>& f, const Tolerance& tol = {});

template <class S>
struct CommuteLR {
    QPolynomial<S> q;
    Quat<S> beta;
};
template <class S>
struct CommuteRL {
    Quat<S> gamma;
    QPolynomial<S> f;
};

// rho_gamma F = Q rho_beta for F without zeros in [gamma].
template <class S>
CommuteLR<S> commute_factor_left_to_right(const Quat<S>& gamma, const QPolynomial<S>& F, const Tolerance& tol = {});
// Q rho_beta = rho_gamma F for Q without zeros in [beta].
template <class S>
CommuteRL<S> commute_factor_right_to_left(const QPolynomial<S>& Q, const Quat<S>& beta, const Tolerance& tol = {});

template <class S>
struct ChainConversion {
    std::vector<Quat<S>> chain;
    QPolynomial<S> cofactor;
};

// rho_{a_1}...rho_{a_n} P = Pt rho_{t_n} ... rho_{t_1}; returns (t_1..t_n, Pt).
template <class S>
ChainConversion<S> left_divisor_to_right(const std::vector<Quat<S>>& chain, const QPolynomial<S>& P,
                                         const Tolerance& tol = {});
// Pt rho_{t_n} ... rho_{t_1} = rho_{a_1}...rho_{a_n} P; returns (a_1..a_n, P).
template <class S>
ChainConversion<S> right_divisor_to_left(const std::vector<Quat<S>>& right_chain, const QPolynomial<S>& Pt,
                                         const Tolerance& tol = {});

// True when F has no zero in [gamma], i.e. F F^sharp does not vanish on it.
template <class S>
bool zero_free_on_class(const QPolynomial<S>& F, const ConjugacyClass<S>& v, const Tolerance& tol = {});

} // namespace quatpoly
