#include "quatpoly/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace quatpoly {

template <class S>
QPolynomial<S> reversed_chain_product(const std::vector<Quat<S>>& chain) {
    auto r = QPolynomial<S>::one();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) r = r * rho(*it);
    return r;
}

template <class S>
QPolynomial<S> SphericalDivisorPair<S>::left_divisor() const {
    return power(characteristic(cls), kappa) * chain_product<S>(left_chain);
}

template <class S>
QPolynomial<S> SphericalDivisorPair<S>::right_divisor() const {
    return reversed_chain_product(right_chain) * power(characteristic(cls), kappa);
}

template <class S>
std::vector<S> shift_recursion(const ConjugacyClass<S>& v, std::size_t count) {
    std::vector<S> r;
    if (count == 0) return r;
    r.push_back(S(1));
    if (count > 1) r.push_back(v.trace);
    while (r.size() < count) {
        std::size_t j = r.size() - 1;
        r.push_back(r[j] * v.trace - r[j - 1] * v.norm2);
    }
    return r;
}

template <class S>
QPolynomial<S> spherical_shift(const QPolynomial<S>& f, const ConjugacyClass<S>& v) {
    if (f.size() < 3) return {};
    std::size_t n = f.size() - 1;
    auto r = shift_recursion(v, n - 1);
    std::vector<Quat<S>> c(n - 1);
    for (std::size_t k = 0; k + 2 <= n; ++k)
        for (std::size_t i = 0; i + k + 2 <= n; ++i) c[k] += f[i + k + 2] * r[i];
    return QPolynomial<S>(std::move(c));
}

namespace {

// Exponent of the irreducible real factor of class v in the real polynomial p.
template <class S>
std::size_t real_factor_multiplicity(QPolynomial<S> p, const ConjugacyClass<S>& v, const Tolerance& tol) {
    auto x = v.is_real ? rho(Quat<S>(v.trace / S(2))) : characteristic(v);
    double radius = std::max(1.0, std::sqrt(std::fabs(ScalarOps<S>::to_double(v.norm2))));
    std::size_t m = 0;
    while (p.size() >= x.size()) {
        double scale = p.weight() * std::pow(radius, static_cast<double>(p.deg0()));
        auto qr = divide_right(p, x, tol);
        bool zero = true;
        for (const auto& c : qr.remainder.coeffs()) zero = zero && c.is_zero(tol, scale);
        if (!zero) break;
        p = qr.quotient;
        ++m;
    }
    return m;
}

template <class S>
Quat<S> probe_point(const ConjugacyClass<S>& v, const std::optional<Quat<S>>& probe) {
    if (probe) return *probe;
    return class_point(v);
}

template <class S>
void check_nonreal(const ConjugacyClass<S>& v) {
    if (v.is_real) fail(ErrorCode::PreconditionViolated, "chain extraction needs a nonreal class");
}

} // namespace

template <class S>
bool zero_free_on_class(const QPolynomial<S>& F, const ConjugacyClass<S>& v, const Tolerance& tol) {
    if (F.is_zero()) return false;
    return real_factor_multiplicity(companion_real(F, tol), v, tol) == 0;
}

template <class S>
ChainExtraction<S> extract_left_chain(const QPolynomial<S>& f, const ConjugacyClass<S>& v, std::size_t k,
                                      const Tolerance& tol, std::optional<Quat<S>> probe) {
    ChainExtraction<S> out;
    out.cofactor = f;
    if (k == 0) return out;
    check_nonreal(v);
    Quat<S> a = probe_point(v, probe), ab = a.conj();
    for (std::size_t j = 0; j < k; ++j) {
        const auto& q = out.cofactor;
        double scale = eval_scale(q, a);
        Quat<S> fa = eval_left(q, a), fb = eval_left(q, ab);
        bool za = fa.is_zero(tol, scale), zb = fb.is_zero(tol, scale);
        // a spherical zero makes every point of the class a root; take the probe
        Quat<S> beta;
        if (za) beta = a;
        else if (zb) beta = ab;
        else {
            try {
                beta = roots_from_left_values(fa, fb, a, tol, scale).left;
            } catch (const Error&) {
                fail(ErrorCode::ChainBroken, "intermediate quotient has no zero in the class");
            }
        }
        if (!ScalarOps<S>::exact && !eval_left(q, beta).is_zero(Tolerance{tol.eps * 100}, eval_scale(q, beta)))
            fail(ErrorCode::ChainBroken, "intermediate quotient has no zero in the class");
        if (ScalarOps<S>::exact && !eval_left(q, beta).is_exact_zero())
            fail(ErrorCode::ChainBroken, "intermediate quotient has no zero in the class");
        out.chain.push_back(beta);
        out.cofactor = shift_left(q, beta);
    }
    return out;
}

template <class S>
ChainExtraction<S> extract_right_chain(const QPolynomial<S>& f, const ConjugacyClass<S>& v, std::size_t k,
                                       const Tolerance& tol, std::optional<Quat<S>> probe) {
    ChainExtraction<S> out;
    out.cofactor = f;
    if (k == 0) return out;
    check_nonreal(v);
    Quat<S> a = probe_point(v, probe), ab = a.conj();
    for (std::size_t j = 0; j < k; ++j) {
        const auto& q = out.cofactor;
        double scale = eval_scale(q, a);
        Quat<S> ra = eval_right(q, a), rb = eval_right(q, ab);
        bool za = ra.is_zero(tol, scale), zb = rb.is_zero(tol, scale);
        Quat<S> beta;
        if (za) beta = a;
        else if (zb) beta = ab;
        else {
            try {
                beta = roots_from_right_values(ra, rb, a, tol, scale).right;
            } catch (const Error&) {
                fail(ErrorCode::ChainBroken, "intermediate quotient has no zero in the class");
            }
        }
        bool ok = ScalarOps<S>::exact ? eval_right(q, beta).is_exact_zero()
                                      : eval_right(q, beta).is_zero(Tolerance{tol.eps * 100}, eval_scale(q, beta));
        if (!ok) fail(ErrorCode::ChainBroken, "intermediate quotient has no zero in the class");
        out.chain.push_back(beta);
        out.cofactor = shift_right(q, beta);
    }
    return out;
}

template <class S>
SphericalDivisorPair<S> spherical_divisors(const QPolynomial<S>& f, const ConjugacyClass<S>& v,
                                           const Tolerance& tol, std::optional<Quat<S>> probe) {
    if (!f.degree() || *f.degree() < 1) fail(ErrorCode::PreconditionViolated, "divisors need degree >= 1");
    SphericalDivisorPair<S> out;
    out.cls = v;
    if (v.is_real) {
        Quat<S> x(v.trace / S(2));
        std::size_t k = mult_left(x, f, tol);
        out.left_chain.assign(k, x);
        out.right_chain.assign(k, x);
        auto q = divide_right(f, power(rho(x), k), tol).quotient;
        out.left_cofactor = q;
        out.right_cofactor = q;
        return out;
    }
    std::size_t m = real_factor_multiplicity(companion_real(f, tol), v, tol);
    Quat<S> a = probe_point(v, probe);
    std::size_t kappa = mult_spherical(v, f, tol, std::optional<Quat<S>>(a));
    if (2 * kappa > m) kappa = m / 2;
    QPolynomial<S> g = f;
    for (std::size_t t = 0; t < kappa; ++t) g = spherical_shift(g, v);
    out.kappa = kappa;
    auto left = extract_left_chain(g, v, m - 2 * kappa, tol, std::optional<Quat<S>>(a));
    auto right = extract_right_chain(g, v, m - 2 * kappa, tol, std::optional<Quat<S>>(a));
    out.left_chain = std::move(left.chain);
    out.left_cofactor = std::move(left.cofactor);
    out.right_chain = std::move(right.chain);
    out.right_cofactor = std::move(right.cofactor);
    return out;
}

template <class S>
std::vector<SphericalDivisorPair<S>> zero_structure(const QPolynomial<S>& f, const Tolerance& tol) {
    auto cs = real_poly_complex_roots(companion_real(f, tol), tol);
    std::vector<SphericalDivisorPair<S>> out;
    for (const auto& c : cs.clusters) out.push_back(spherical_divisors(f, c.cls, tol));
    return out;
}

template <class S>
CommuteLR<S> commute_factor_left_to_right(const Quat<S>& gamma, const QPolynomial<S>& F, const Tolerance& tol) {
    if (!zero_free_on_class(F, class_of(gamma, tol), tol))
        fail(ErrorCode::PreconditionViolated, "F has a zero in the class of gamma");
    Quat<S> fb = eval_left(F, gamma.conj());
    Quat<S> beta = conjugate_by(fb, gamma);
    auto q = shift_right(rho(gamma) * F, beta);
    return {q, beta};
}

template <class S>
CommuteRL<S> commute_factor_right_to_left(const QPolynomial<S>& Q, const Quat<S>& beta, const Tolerance& tol) {
    if (!zero_free_on_class(Q, class_of(beta, tol), tol))
        fail(ErrorCode::PreconditionViolated, "Q has a zero in the class of beta");
    Quat<S> qb = eval_right(Q, beta.conj());
    Quat<S> gamma = qb * beta * qb.inverse();
    auto f = shift_left(Q * rho(beta), gamma);
    return {gamma, f};
}

template <class S>
ChainConversion<S> left_divisor_to_right(const std::vector<Quat<S>>& chain, const QPolynomial<S>& P,
                                         const Tolerance& tol) {
    ChainConversion<S> out;
    out.cofactor = P;
    for (std::size_t j = chain.size(); j-- > 0;) {
        auto c = commute_factor_left_to_right(chain[j], out.cofactor, tol);
        out.chain.push_back(c.beta);
        out.cofactor = std::move(c.q);
    }
    return out;
}

template <class S>
ChainConversion<S> right_divisor_to_left(const std::vector<Quat<S>>& right_chain, const QPolynomial<S>& Pt,
                                         const Tolerance& tol) {
    ChainConversion<S> out;
    out.cofactor = Pt;
    for (std::size_t j = right_chain.size(); j-- > 0;) {
        auto c = commute_factor_right_to_left(out.cofactor, right_chain[j], tol);
        out.chain.push_back(c.gamma);
        out.cofactor = std::move(c.f);
    }
    return out;
}

#define QUATPOLY_INSTANTIATE(S)                                                                               \
    template struct SphericalDivisorPair<S>;                                                                  \
    template QPolynomial<S> reversed_chain_product(const std::vector<Quat<S>>&);                              \
    template std::vector<S> shift_recursion(const ConjugacyClass<S>&, std::size_t);                           \
    template QPolynomial<S> spherical_shift(const QPolynomial<S>&, const ConjugacyClass<S>&);                 \
    template bool zero_free_on_class(const QPolynomial<S>&, const ConjugacyClass<S>&, const Tolerance&);      \
    template ChainExtraction<S> extract_left_chain(const QPolynomial<S>&, const ConjugacyClass<S>&,           \
                                                   std::size_t, const Tolerance&, std::optional<Quat<S>>);    \
    template ChainExtraction<S> extract_right_chain(const QPolynomial<S>&, const ConjugacyClass<S>&,          \
                                                    std::size_t, const Tolerance&, std::optional<Quat<S>>);   \
    template SphericalDivisorPair<S> spherical_divisors(const QPolynomial<S>&, const ConjugacyClass<S>&,      \
                                                        const Tolerance&, std::optional<Quat<S>>);            \
    template std::vector<SphericalDivisorPair<S>> zero_structure(const QPolynomial<S>&, const Tolerance&);    \
    template CommuteLR<S> commute_factor_left_to_right(const Quat<S>&, const QPolynomial<S>&,                 \
                                                       const Tolerance&);                                     \
    template CommuteRL<S> commute_factor_right_to_left(const QPolynomial<S>&, const Quat<S>&,                 \
                                                       const Tolerance&);                                     \
    template ChainConversion<S> left_divisor_to_right(const std::vector<Quat<S>>&, const QPolynomial<S>&,     \
                                                      const Tolerance&);                                      \
    template ChainConversion<S> right_divisor_to_left(const std::vector<Quat<S>>&, const QPolynomial<S>&,     \
                                                      const Tolerance&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
