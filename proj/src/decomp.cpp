#include "quatpoly/decomp.hpp"

#include <algorithm>

namespace quatpoly {

const char* part_role_name(PartRole r) {
    switch (r) {
    case PartRole::Chain: return "chain";
    case PartRole::ChainExtension: return "chain-extension";
    case PartRole::ConjugatePower: return "conjugate-power";
    case PartRole::SphericalPower: return "spherical-power";
    case PartRole::SphericalConjugatePower: return "spherical-conjugate-power";
    case PartRole::RealPower: return "real-power";
    }
    return "?";
}

template <class S>
IndecomposableCheck<S> is_indecomposable(const QPolynomial<S>& f, const Tolerance& tol) {
    IndecomposableCheck<S> out;
    if (!f.degree() || *f.degree() < 1) return out;
    auto g = monic_right(f);
    auto zs = zero_structure(g, tol);
    if (zs.size() != 1) return out;
    const auto& d = zs.front();
    if (d.kappa != 0) return out;
    if (!approx_equal(d.left_cofactor, QPolynomial<S>::one(), tol)) return out;
    out.indecomposable = true;
    out.chain = d.left_chain;
    return out;
}

namespace {

template <class S>
IndecomposableFactor<S> factor_of(const ConjugacyClass<S>& v, std::vector<Quat<S>> chain) {
    IndecomposableFactor<S> f;
    f.cls = v;
    f.poly = chain_product<S>(chain);
    f.chain = std::move(chain);
    return f;
}

template <class S>
IrreducibleDecomposition<S> decompose_left(const QPolynomial<S>& g, const Tolerance& tol) {
    IrreducibleDecomposition<S> out;
    for (const auto& d : zero_structure(g, tol)) {
        ++out.classes;
        const auto& v = d.cls;
        if (v.is_real) {
            out.parts.push_back({factor_of(v, d.left_chain), PartRole::RealPower});
        } else if (d.kappa == 0) {
            out.parts.push_back({factor_of(v, d.left_chain), PartRole::Chain});
        } else if (!d.left_chain.empty()) {
            ++out.spherical_classes;
            auto ext = d.left_chain;
            ext.insert(ext.end(), d.kappa, d.left_chain.back());
            out.parts.push_back({factor_of(v, std::move(ext)), PartRole::ChainExtension});
            out.parts.push_back({factor_of(v, std::vector<Quat<S>>(d.kappa, d.left_chain.front().conj())),
                                 PartRole::ConjugatePower});
        } else {
            ++out.spherical_classes;
            Quat<S> a = class_point(v);
            out.parts.push_back({factor_of(v, std::vector<Quat<S>>(d.kappa, a)), PartRole::SphericalPower});
            out.parts.push_back(
                {factor_of(v, std::vector<Quat<S>>(d.kappa, a.conj())), PartRole::SphericalConjugatePower});
        }
    }
    return out;
}

} // namespace

template <class S>
IrreducibleDecomposition<S> decompose(const QPolynomial<S>& f, Side side, const Tolerance& tol) {
    if (!f.degree() || *f.degree() < 1) fail(ErrorCode::PreconditionViolated, "decomposition needs degree >= 1");
    Quat<S> unit = f.leading();
    if (side == Side::Left) {
        auto out = decompose_left(monic_right(f), tol);
        out.unit = unit;
        return out;
    }
    // Right side through the sharp duality: parts of f^sharp mapped back.
    auto monic = unit.inverse() * f;
    auto out = decompose_left(sharp(monic), tol);
    for (auto& p : out.parts) {
        std::vector<Quat<S>> chain;
        for (auto it = p.factor.chain.rbegin(); it != p.factor.chain.rend(); ++it) chain.push_back(it->conj());
        p.factor = factor_of(p.factor.cls, std::move(chain));
    }
    out.side = Side::Right;
    out.unit = unit;
    return out;
}

template <class S>
QPolynomial<S> recombine(const IrreducibleDecomposition<S>& d, const Tolerance& tol) {
    std::vector<QPolynomial<S>> polys;
    for (const auto& p : d.parts) polys.push_back(p.factor.poly);
    if (polys.empty()) return QPolynomial<S>::one();
    return d.side == Side::Left ? lrcm_general(polys, tol).result : llcm_general(polys, tol).result;
}

#define QUATPOLY_INSTANTIATE(S)                                                                          \
    template IndecomposableCheck<S> is_indecomposable(const QPolynomial<S>&, const Tolerance&);          \
    template IrreducibleDecomposition<S> decompose(const QPolynomial<S>&, Side, const Tolerance&);       \
    template QPolynomial<S> recombine(const IrreducibleDecomposition<S>&, const Tolerance&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
