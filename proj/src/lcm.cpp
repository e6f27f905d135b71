#include "quatpoly/lcm.hpp"

#include <algorithm>

namespace quatpoly {

namespace {

template <class S>
void require_same_class(const ConjugacyClass<S>& a, const ConjugacyClass<S>& b, const Tolerance& tol) {
    if (a.is_real != b.is_real || !same_class(a, b, tol))
        fail(ErrorCode::ClassMismatch, "members lie in different classes");
}

template <class S>
bool same_point(const Quat<S>& a, const Quat<S>& b, const Tolerance& tol) {
    return approx_equal(a, b, tol, 1.0 + a.abs());
}

template <class S>
std::vector<Quat<S>> prefix(const std::vector<Quat<S>>& chain, std::size_t n) {
    return {chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(n)};
}

template <class S>
bool divides_left(const QPolynomial<S>& p, const QPolynomial<S>& f, const Tolerance& tol) {
    return divide_right(f, p, tol).remainder.is_zero();
}

} // namespace

template <class S>
IndecomposableFactor<S> make_indecomposable(std::vector<Quat<S>> chain, const Tolerance& tol) {
    IndecomposableFactor<S> out;
    if (!chain.empty()) {
        out.cls = class_of(chain[0], tol);
        if (out.cls.is_real) {
            for (const auto& x : chain)
                if (!same_point(x, chain[0], tol))
                    fail(ErrorCode::PreconditionViolated, "real chain must repeat one point");
        } else if (!validate_spherical_chain<S>(chain, tol)) {
            fail(ErrorCode::PreconditionViolated, "not a spherical chain");
        }
    }
    out.poly = chain_product<S>(chain);
    out.chain = std::move(chain);
    return out;
}

template <class S>
QPolynomial<S> PrescribedDivisor<S>::polynomial() const {
    auto p = chain_product<S>(chain);
    if (kappa > 0) p = power(characteristic(cls), kappa) * p;
    return p;
}

template <class S>
QPolynomial<S> lrcm_same_class_coprime(const IndecomposableFactor<S>& g0, const IndecomposableFactor<S>& h0,
                                       const Tolerance& tol) {
    const auto& g = g0.degree() >= h0.degree() ? g0 : h0;
    const auto& h = g0.degree() >= h0.degree() ? h0 : g0;
    if (h.degree() == 0) return g.poly;
    require_same_class(g.cls, h.cls, tol);
    if (g.cls.is_real || same_point(g.chain.front(), h.chain.front(), tol))
        fail(ErrorCode::NotCoprime, "members share a left zero");
    std::size_t n = g.degree(), k = h.degree();
    return power(characteristic(g.cls), k) * chain_product<S>(prefix(g.chain, n - k));
}

template <class S>
QPolynomial<S> llcm_same_class_coprime(const IndecomposableFactor<S>& g0, const IndecomposableFactor<S>& h0,
                                       const Tolerance& tol) {
    const auto& g = g0.degree() >= h0.degree() ? g0 : h0;
    const auto& h = g0.degree() >= h0.degree() ? h0 : g0;
    if (h.degree() == 0) return g.poly;
    require_same_class(g.cls, h.cls, tol);
    if (g.cls.is_real || same_point(g.chain.back(), h.chain.back(), tol))
        fail(ErrorCode::NotCoprime, "members share a right zero");
    std::size_t k = h.degree();
    std::vector<Quat<S>> tail(g.chain.begin() + static_cast<std::ptrdiff_t>(k), g.chain.end());
    return power(characteristic(g.cls), k) * chain_product<S>(tail);
}

template <class S>
IndecomposableFactor<S> glcd_indecomposable(const IndecomposableFactor<S>& g, const IndecomposableFactor<S>& h,
                                            const Tolerance& tol) {
    std::size_t t = 0, top = std::min(g.degree(), h.degree());
    while (t < top && same_point(g.chain[t], h.chain[t], tol)) ++t;
    for (;; --t) {
        auto p = prefix(g.chain, t);
        auto poly = chain_product<S>(p);
        if (t == 0 || divides_left(poly, h.poly, tol)) {
            IndecomposableFactor<S> out;
            out.cls = g.cls;
            out.chain = std::move(p);
            out.poly = std::move(poly);
            return out;
        }
    }
}

template <class S>
PrescribedDivisor<S> lrcm_indecomposable_family(const std::vector<IndecomposableFactor<S>>& family,
                                                const Tolerance& tol) {
    std::vector<const IndecomposableFactor<S>*> live;
    for (const auto& f : family)
        if (f.degree() > 0) live.push_back(&f);
    if (live.empty()) return {};
    for (auto* f : live) require_same_class(live.front()->cls, f->cls, tol);
    auto top = std::max_element(live.begin(), live.end(),
                                [](auto* a, auto* b) { return a->degree() < b->degree(); });
    const auto& g1 = **top;
    if (g1.cls.is_real) return {g1.cls, 0, g1.chain};
    std::size_t k = 0;
    for (auto* f : live) {
        if (f == &g1) continue;
        auto p = glcd_indecomposable(g1, *f, tol);
        k = std::max(k, f->degree() - p.degree());
    }
    return {g1.cls, k, prefix(g1.chain, g1.degree() - k)};
}

template <class S>
PrescribedDivisor<S> lrcm_same_class(const std::vector<PrescribedDivisor<S>>& members, const Tolerance& tol) {
    std::vector<const PrescribedDivisor<S>*> live;
    for (const auto& m : members)
        if (m.degree() > 0) live.push_back(&m);
    if (live.empty()) return {};
    const auto& cls = live.front()->cls;
    for (auto* m : live) require_same_class(cls, m->cls, tol);
    if (cls.is_real) {
        auto best = *std::max_element(live.begin(), live.end(),
                                      [](auto* a, auto* b) { return a->chain.size() < b->chain.size(); });
        return *best;
    }
    std::size_t pure_kappa = 0;
    const std::vector<Quat<S>>* some_chain = nullptr;
    for (auto* m : live) {
        if (m->chain.empty()) pure_kappa = std::max(pure_kappa, m->kappa);
        else if (!some_chain) some_chain = &m->chain;
    }
    if (!some_chain) return {cls, pure_kappa, {}};

    // Split X_V^kappa P into g = P rho_{a_n}^kappa and h = rho_{conj a_1}^kappa.
    std::vector<IndecomposableFactor<S>> family;
    auto add = [&](std::vector<Quat<S>> chain) {
        IndecomposableFactor<S> f;
        f.cls = cls;
        f.poly = chain_product<S>(chain);
        f.chain = std::move(chain);
        family.push_back(std::move(f));
    };
    for (auto* m : live) {
        if (m->chain.empty()) continue;
        auto g = m->chain;
        if (m->kappa > 0) {
            g.insert(g.end(), m->kappa, m->chain.back());
            add(std::vector<Quat<S>>(m->kappa, m->chain.front().conj()));
        }
        add(std::move(g));
    }
    if (pure_kappa > 0) {
        Quat<S> a = some_chain->front();
        add(std::vector<Quat<S>>(pure_kappa, a));
        add(std::vector<Quat<S>>(pure_kappa, a.conj()));
    }
    return lrcm_indecomposable_family(family, tol);
}

template <class S>
CrossClassLcm<S> lrcm_cross_class(const IndecomposableFactor<S>& F, const QPolynomial<S>& Q, const Tolerance& tol) {
    CrossClassLcm<S> out;
    if (F.degree() == 0) {
        out.lcm = out.lcm_via_q = out.q_k = Q;
        return out;
    }
    if (!zero_free_on_class(Q, F.cls, tol)) fail(ErrorCode::PreconditionViolated, "Q has a zero in the class of F");
    QPolynomial<S> qj = Q;
    QPolynomial<S> via_q = Q;
    for (const auto& a : F.chain) {
        Quat<S> qa = eval_left(qj, a);
        Quat<S> t = conjugate_by(qa, a);
        out.tail_chain.push_back(t);
        qj = shift_left(qj * rho(t), a);
        via_q = via_q * rho(t);
    }
    out.q_k = qj;
    out.lcm = F.poly * qj;
    out.lcm_via_q = via_q;
    return out;
}

template <class S>
QPolynomial<S> lrcm_distinct_classes(const std::vector<IndecomposableFactor<S>>& factors, const Tolerance& tol) {
    std::vector<const IndecomposableFactor<S>*> live;
    for (const auto& f : factors)
        if (f.degree() > 0) live.push_back(&f);
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = a + 1; b < live.size(); ++b)
            if (live[a]->cls.is_real == live[b]->cls.is_real && same_class(live[a]->cls, live[b]->cls, tol))
                fail(ErrorCode::ClassCollision, "two factors share a class");
    if (live.empty()) return QPolynomial<S>::one();
    QPolynomial<S> p = live.front()->poly;
    for (std::size_t i = 1; i < live.size(); ++i) p = lrcm_cross_class(*live[i], p, tol).lcm_via_q;
    return p;
}

template <class S>
QPolynomial<S> synthesize_from_divisors(const std::vector<PrescribedDivisor<S>>& divisors, const Tolerance& tol) {
    std::vector<const PrescribedDivisor<S>*> live;
    for (const auto& d : divisors)
        if (d.degree() > 0) live.push_back(&d);
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = a + 1; b < live.size(); ++b)
            if (live[a]->cls.is_real == live[b]->cls.is_real && same_class(live[a]->cls, live[b]->cls, tol))
                fail(ErrorCode::ClassCollision, "two divisors share a class");
    std::vector<IndecomposableFactor<S>> chains;
    QPolynomial<S> central = QPolynomial<S>::one();
    for (auto* d : live) {
        if (d->cls.is_real) {
            central = central * chain_product<S>(d->chain);
            continue;
        }
        if (d->kappa > 0) central = central * power(characteristic(d->cls), d->kappa);
        if (!d->chain.empty()) {
            IndecomposableFactor<S> f;
            f.cls = d->cls;
            f.chain = d->chain;
            f.poly = chain_product<S>(d->chain);
            chains.push_back(std::move(f));
        }
    }
    return lrcm_distinct_classes(chains, tol) * central;
}

namespace {

template <class S>
std::vector<ConjugacyClass<S>> collect_classes(const std::vector<QPolynomial<S>>& polys, const Tolerance& tol) {
    std::vector<ConjugacyClass<S>> all;
    for (const auto& g : polys) {
        if (g.deg0() < 1) continue;
        for (const auto& c : real_poly_complex_roots(companion_real(g, tol), tol).clusters) {
            bool seen = false;
            for (const auto& v : all) seen = seen || (v.is_real == c.cls.is_real && same_class(v, c.cls, tol));
            if (!seen) all.push_back(c.cls);
        }
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return class_less(a, b); });
    return all;
}

} // namespace

template <class S>
LcmResult<S> lrcm_general(const std::vector<QPolynomial<S>>& polys, const Tolerance& tol) {
    LcmResult<S> out;
    std::vector<QPolynomial<S>> monic;
    for (const auto& p : polys) {
        if (p.is_zero()) fail(ErrorCode::PreconditionViolated, "lcm of the zero polynomial");
        out.units.push_back(p.leading());
        monic.push_back(monic_right(p));
    }
    std::vector<PrescribedDivisor<S>> per_class;
    for (const auto& v : collect_classes(monic, tol)) {
        std::vector<PrescribedDivisor<S>> members;
        for (const auto& g : monic) {
            if (g.deg0() < 1 || zero_free_on_class(g, v, tol)) continue;
            members.push_back(left_prescribed(spherical_divisors(g, v, tol)));
        }
        per_class.push_back(lrcm_same_class(members, tol));
    }
    out.result = synthesize_from_divisors(per_class, tol);
    for (const auto& p : polys) out.quotients.push_back(divide_right(out.result, p, tol).quotient);
    return out;
}

template <class S>
LcmResult<S> llcm_general(const std::vector<QPolynomial<S>>& polys, const Tolerance& tol) {
    std::vector<QPolynomial<S>> sharps;
    for (const auto& p : polys) sharps.push_back(sharp(p));
    auto dual = lrcm_general(sharps, tol);
    LcmResult<S> out;
    out.result = sharp(dual.result);
    for (const auto& p : polys) {
        out.units.push_back(p.leading());
        out.quotients.push_back(divide_left(out.result, p, tol).quotient);
    }
    return out;
}

#define QUATPOLY_INSTANTIATE(S)                                                                                 \
    template struct PrescribedDivisor<S>;                                                                       \
    template IndecomposableFactor<S> make_indecomposable(std::vector<Quat<S>>, const Tolerance&);               \
    template QPolynomial<S> lrcm_same_class_coprime(const IndecomposableFactor<S>&,                             \
                                                    const IndecomposableFactor<S>&, const Tolerance&);          \
    template QPolynomial<S> llcm_same_class_coprime(const IndecomposableFactor<S>&,                             \
                                                    const IndecomposableFactor<S>&, const Tolerance&);          \
    template IndecomposableFactor<S> glcd_indecomposable(const IndecomposableFactor<S>&,                        \
                                                         const IndecomposableFactor<S>&, const Tolerance&);     \
    template PrescribedDivisor<S> lrcm_indecomposable_family(const std::vector<IndecomposableFactor<S>>&,       \
                                                             const Tolerance&);                                 \
    template PrescribedDivisor<S> lrcm_same_class(const std::vector<PrescribedDivisor<S>>&, const Tolerance&);  \
    template CrossClassLcm<S> lrcm_cross_class(const IndecomposableFactor<S>&, const QPolynomial<S>&,           \
                                               const Tolerance&);                                               \
    template QPolynomial<S> lrcm_distinct_classes(const std::vector<IndecomposableFactor<S>>&, const Tolerance&); \
    template QPolynomial<S> synthesize_from_divisors(const std::vector<PrescribedDivisor<S>>&, const Tolerance&); \
    template LcmResult<S> lrcm_general(const std::vector<QPolynomial<S>>&, const Tolerance&);                   \
    template LcmResult<S> llcm_general(const std::vector<QPolynomial<S>>&, const Tolerance&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
