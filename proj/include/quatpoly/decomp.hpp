#pragma once

#include <optional>
#include <vector>

#include "quatpoly/lcm.hpp"

namespace quatpoly {

enum class PartRole {
    Chain,          // kappa = 0: the chain polynomial itself
    ChainExtension, // P rho_{a_n}^kappa
    ConjugatePower, // rho_{conj a_1}^kappa
    SphericalPower, // rho_a^kappa for a pure X_V^kappa
    SphericalConjugatePower,
    RealPower, // rho_x^k, kept whole
};

const char* part_role_name(PartRole r);

template <class S>
struct DecompositionPart {
    IndecomposableFactor<S> factor;
    PartRole role = PartRole::Chain;
};

template <class S>
struct IrreducibleDecomposition {
    Side side = Side::Left;
    std::vector<DecompositionPart<S>> parts;
    Quat<S> unit{S(1)}; // f = monic * unit (Left) or unit * monic (Right)
    std::size_t spherical_classes = 0;
    std::size_t classes = 0;
};

template <class S>
struct IndecomposableCheck {
    bool indecomposable = false;
    std::vector<Quat<S>> chain; // witness when indecomposable
};

template <class S>
IndecomposableCheck<S> is_indecomposable(const QPolynomial<S>& f, const Tolerance& tol = {});

template <class S>
IrreducibleDecomposition<S> decompose(const QPolynomial<S>& f, Side side, const Tolerance& tol = {});

// lrcm (Left) or llcm (Right) of the parts.
template <class S>
QPolynomial<S> recombine(const IrreducibleDecomposition<S>& d, const Tolerance& tol = {});

} // namespace quatpoly
