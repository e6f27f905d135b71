#pragma once

#include <optional>
#include <vector>

#include "quatpoly/polynomial.hpp"

namespace quatpoly {

// One irreducible real factor of a real polynomial: z - x (real) or
// z^2 - trace z + norm2 (a conjugate pair), with its exponent.
template <class S>
struct ComplexRootCluster {
    ConjugacyClass<S> cls;
    std::size_t multiplicity = 0;
};

template <class S>
struct ClusterSet {
    std::vector<ComplexRootCluster<S>> clusters; // sorted by (trace, norm2)
    bool merged = false;                         // nearby roots were merged into one cluster
};

// Complex roots of a real polynomial grouped by conjugacy class.
// float64: Aberth iteration + inclusion-disk clustering + Newton polishing.
// exact: square-free part, numerical isolation, continued-fraction recovery of
// (trace, norm2), exact verification by division. Throws NeedsFloatBackend
// when a factor cannot be recovered exactly.
template <class S>
ClusterSet<S> real_poly_complex_roots(const QPolynomial<S>& p, const Tolerance& tol = {});

template <class S>
struct RootPair {
    Quat<S> left;
    Quat<S> right;
};

// Left and right root of f in [alpha] from left evaluations at alpha, conj(alpha).
template <class S>
RootPair<S> roots_from_left_values(const Quat<S>& fa, const Quat<S>& fb, const Quat<S>& alpha,
                                   const Tolerance& tol = {}, double scale = 1.0);
// Same from right evaluations.
template <class S>
RootPair<S> roots_from_right_values(const Quat<S>& ra, const Quat<S>& rb, const Quat<S>& alpha,
                                    const Tolerance& tol = {}, double scale = 1.0);

template <class S>
RootPair<S> in_class_roots_left_eval(const QPolynomial<S>& f, const Quat<S>& alpha, const Tolerance& tol = {});
template <class S>
RootPair<S> in_class_roots_right_eval(const QPolynomial<S>& f, const Quat<S>& alpha, const Tolerance& tol = {});

enum class ZeroKind { Spherical, Isolated, Real };

const char* zero_kind_name(ZeroKind k);

template <class S>
struct RootEntry {
    ConjugacyClass<S> cls;
    std::size_t multiplicity = 0; // exponent of the irreducible real factor in f f^sharp
    ZeroKind kind = ZeroKind::Isolated;
    std::optional<Quat<S>> left_root;
    std::optional<Quat<S>> right_root;
};

template <class S>
struct RootReport {
    std::vector<RootEntry<S>> classes;
    bool clusters_merged = false;
};

template <class S>
RootReport<S> find_all_roots(const QPolynomial<S>& f, const Tolerance& tol = {});

// Some left zero of f in each class, nonreal classes probed at class_point.
template <class S>
Quat<S> some_left_root(const RootEntry<S>& e);

// f = rho_{g_1} ... rho_{g_n} * lead, monic-normalized first. Each g_j is a
// left zero of the running quotient.
template <class S>
struct LinearFactorization {
    std::vector<Quat<S>> roots;
    Quat<S> lead;
};

template <class S>
LinearFactorization<S> factor_linear(const QPolynomial<S>& f, const Tolerance& tol = {});

} // namespace quatpoly
