#include "quatpoly/rootfind.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numeric>

namespace quatpoly {

const char* zero_kind_name(ZeroKind k) {
    switch (k) {
    case ZeroKind::Spherical: return "spherical";
    case ZeroKind::Isolated: return "isolated";
    case ZeroKind::Real: return "real";
    }
    return "?";
}

namespace {

using cplx = std::complex<double>;

constexpr int kMaxSweeps = 200;

struct Horner {
    cplx p, dp;
    double bound; // sum |b_j| |z|^j
};

Horner horner(const std::vector<double>& b, cplx z) {
    cplx p = b.back(), dp = 0;
    double az = std::abs(z), bound = std::fabs(b.back());
    for (std::size_t k = b.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + b[k];
        bound = bound * az + std::fabs(b[k]);
    }
    return {p, dp, bound};
}

cplx eval_c(const std::vector<double>& b, cplx z) {
    cplx p = b.back();
    for (std::size_t k = b.size() - 1; k-- > 0;) p = p * z + b[k];
    return p;
}

std::vector<double> deriv(const std::vector<double>& b, std::size_t times) {
    std::vector<double> d = b;
    for (std::size_t t = 0; t < times && d.size() > 1; ++t) {
        std::vector<double> e(d.size() - 1);
        for (std::size_t k = 1; k < d.size(); ++k) e[k - 1] = d[k] * static_cast<double>(k);
        d = std::move(e);
    }
    return d;
}

// Aberth-Ehrlich simultaneous iteration on a monic real polynomial b
// (ascending coefficients, b.back() == 1).
std::vector<cplx> aberth(const std::vector<double>& b, double eps) {
    std::size_t n = b.size() - 1;
    std::vector<cplx> z(n);
    if (n == 0) return z;
    if (n == 1) return {cplx(-b[0], 0)};
    double r0 = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (b[k] != 0) r0 = std::max(r0, std::pow(std::fabs(b[k]), 1.0 / static_cast<double>(n - k)));
    if (r0 == 0) return z; // z^n
    const double two_pi = 6.283185307179586;
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(r0, two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

    std::vector<char> done(n, 0);
    const double u = DBL_EPSILON;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool all = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            auto h = horner(b, z[k]);
            if (std::abs(h.p) <= 4.0 * static_cast<double>(n) * u * h.bound) {
                done[k] = 1;
                continue;
            }
            cplx step;
            if (h.dp == cplx(0)) {
                step = cplx(1e-3 * (1 + std::abs(z[k])), 1e-3);
            } else {
                cplx w = h.p / h.dp, s = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k && z[j] != z[k]) s += 1.0 / (z[k] - z[j]);
                step = w / (1.0 - w * s);
            }
            z[k] -= step;
            if (std::abs(step) <= eps * (1 + std::abs(z[k]))) done[k] = 1;
            else all = false;
        }
        if (all && std::all_of(done.begin(), done.end(), [](char c) { return c != 0; })) return z;
    }
    fail(ErrorCode::NoConvergence, "root iteration did not converge in 200 sweeps");
}

struct FloatCluster {
    cplx center;
    std::size_t mult;
    double radius;
};

// Group approximations whose inclusion disks overlap, then polish the
// centroid with Newton on the (m-1)-th derivative.
std::vector<FloatCluster> cluster_roots(const std::vector<double>& b, const std::vector<cplx>& z, double delta) {
    std::size_t n = z.size();
    std::vector<double> rad(n, delta);
    for (std::size_t k = 0; k < n; ++k) {
        cplx prod = 1;
        bool coincide = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            if (z[j] == z[k]) { coincide = true; break; }
            prod *= z[k] - z[j];
        }
        if (coincide) continue;
        double w = std::abs(eval_c(b, z[k]) / prod);
        rad[k] = std::max(delta, static_cast<double>(n) * w);
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= rad[i] + rad[j]) parent[find(i)] = find(j);

    std::vector<FloatCluster> out;
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    for (auto& g : groups) {
        if (g.empty()) continue;
        cplx c = 0;
        for (auto i : g) c += z[i];
        c /= static_cast<double>(g.size());
        double r = delta;
        for (auto i : g) r = std::max(r, std::abs(z[i] - c) + rad[i]);
        auto q = deriv(b, g.size() - 1);
        auto dq = deriv(q, 1);
        cplx x = c;
        for (int it = 0; it < 12 && dq.size() >= 1; ++it) {
            cplx d = eval_c(dq, x);
            if (d == cplx(0)) break;
            cplx step = eval_c(q, x) / d;
            x -= step;
            if (std::abs(step) <= 4 * DBL_EPSILON * (1 + std::abs(x))) break;
        }
        if (std::isfinite(x.real()) && std::isfinite(x.imag()) && std::abs(x - c) <= r) c = x;
        out.push_back({c, g.size(), r});
    }
    return out;
}

ClusterSet<double> float_clusters(const std::vector<double>& a, const Tolerance& tol) {
    std::vector<double> b = a;
    double lead = b.back();
    for (auto& x : b) x /= lead;
    double maxc = 0;
    for (auto x : b) maxc = std::max(maxc, std::fabs(x));
    double delta = tol.eps * (1 + maxc);
    auto z = aberth(b, tol.eps);
    auto cl = cluster_roots(b, z, delta);

    ClusterSet<double> out;
    std::size_t upper = 0, lower = 0;
    for (const auto& c : cl) {
        double im = c.center.imag();
        if (std::fabs(im) <= std::max(c.radius, delta)) {
            if (std::fabs(im) > delta) out.merged = true;
            double x = c.center.real();
            out.clusters.push_back({{2 * x, x * x, true}, c.mult});
        } else if (im > 0) {
            upper += c.mult;
            out.clusters.push_back({{2 * c.center.real(), std::norm(c.center), false}, c.mult});
        } else {
            lower += c.mult;
        }
    }
    if (upper != lower) out.merged = true;
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const auto& x, const auto& y) { return class_less(x.cls, y.cls); });
    // classes that coincide under tolerance are merged
    std::vector<ComplexRootCluster<double>> merged;
    for (const auto& c : out.clusters) {
        if (!merged.empty() && merged.back().cls.is_real == c.cls.is_real &&
            same_class(merged.back().cls, c.cls, tol)) {
            merged.back().multiplicity += c.multiplicity;
            out.merged = true;
        } else {
            merged.push_back(c);
        }
    }
    out.clusters = std::move(merged);
    return out;
}

// ---- exact backend -------------------------------------------------------

using RPoly = std::vector<Rational>; // ascending, no trailing zeros

void strip(RPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RPoly rp_mod(RPoly a, const RPoly& b, RPoly* quot = nullptr) {
    strip(a);
    std::size_t db = b.size() - 1;
    if (quot) quot->assign(a.size() > db ? a.size() - db : 0, Rational(0));
    Rational inv = Rational(1) / b.back();
    while (a.size() > db && !a.empty()) {
        std::size_t d = a.size() - 1 - db;
        Rational t = a.back() * inv;
        if (quot) (*quot)[d] = t;
        for (std::size_t k = 0; k <= db; ++k) a[d + k] -= b[k] * t;
        a.pop_back();
        strip(a);
    }
    return a;
}

RPoly rp_gcd(RPoly a, RPoly b) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        RPoly r = rp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    Rational inv = Rational(1) / a.back();
    for (auto& x : a) x *= inv;
    return a;
}

RPoly rp_deriv(const RPoly& a) {
    RPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Rational(static_cast<long>(k)));
    strip(d);
    return d;
}

constexpr unsigned kPrec = 384;

struct MpC {
    mpf_class re{0, kPrec}, im{0, kPrec};
};

MpC mp_eval(const std::vector<mpf_class>& c, const MpC& z, MpC* deriv_out) {
    MpC p, dp;
    p.re = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        // dp = dp*z + p ; p = p*z + c[k]
        mpf_class dre(dp.re * z.re - dp.im * z.im + p.re, kPrec);
        mpf_class dim(dp.re * z.im + dp.im * z.re + p.im, kPrec);
        dp.re = dre;
        dp.im = dim;
        mpf_class pre(p.re * z.re - p.im * z.im + c[k], kPrec);
        mpf_class pim(p.re * z.im + p.im * z.re, kPrec);
        p.re = pre;
        p.im = pim;
    }
    if (deriv_out) *deriv_out = dp;
    return p;
}

MpC mp_newton(const std::vector<mpf_class>& c, cplx z0, bool real_only) {
    MpC z;
    z.re = z0.real();
    z.im = real_only ? 0.0 : z0.imag();
    mpf_class tiny(1, kPrec);
    mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), kPrec - 24);
    for (int it = 0; it < 100; ++it) {
        MpC d;
        MpC p = mp_eval(c, z, &d);
        mpf_class den(d.re * d.re + d.im * d.im, kPrec);
        if (den == 0) break;
        // step = p / d
        mpf_class sre((p.re * d.re + p.im * d.im) / den, kPrec);
        mpf_class sim((p.im * d.re - p.re * d.im) / den, kPrec);
        z.re -= sre;
        z.im -= sim;
        if (real_only) z.im = 0;
        mpf_class mag(abs(sre) + abs(sim), kPrec);
        mpf_class ref(1 + abs(z.re) + abs(z.im), kPrec);
        if (mag <= tiny * ref) break;
    }
    return z;
}

// Continued-fraction recovery of a rational from a high-precision value.
Rational rationalize(const mpf_class& x) {
    mpq_class target;
    mpq_set_f(target.get_mpq_t(), x.get_mpf_t());
    mpq_class thr(1);
    mpz_class two150;
    mpz_ui_pow_ui(two150.get_mpz_t(), 2, 150);
    thr /= two150;
    thr *= (abs(target) > 1 ? mpq_class(abs(target)) : mpq_class(1));
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpq_class rem = target;
    for (int it = 0; it < 400; ++it) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        mpq_class conv(h2, k2);
        conv.canonicalize();
        if (abs(target - conv) <= thr) return Rational(conv);
        mpq_class frac = rem - mpq_class(a);
        if (frac == 0) return Rational(conv);
        rem = 1 / frac;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    }
    return Rational(target);
}

[[noreturn]] void needs_float() {
    fail(ErrorCode::NeedsFloatBackend, "f f^sharp does not split into rational linear/quadratic factors");
}

ClusterSet<Rational> exact_clusters(RPoly a) {
    strip(a);
    Rational inv = Rational(1) / a.back();
    for (auto& x : a) x *= inv;

    RPoly g = rp_gcd(a, rp_deriv(a));
    RPoly s;
    rp_mod(a, g, &s); // square-free part
    strip(s);

    std::vector<RPoly> factors; // monic irreducible factors of s over Q (degree 1 or 2)
    if (s.size() == 2) {
        factors.push_back(s);
    } else if (s.size() == 3 && s[1] * s[1] - Rational(4) * s[0] < Rational(0)) {
        factors.push_back(s);
    } else if (s.size() > 1) {
        std::vector<double> bd;
        for (const auto& x : s) bd.push_back(x.to_double());
        for (double x : bd)
            if (!std::isfinite(x)) needs_float();
        std::vector<cplx> z;
        try {
            z = aberth(bd, 1e-14);
        } catch (const Error&) {
            needs_float();
        }
        std::vector<mpf_class> cm;
        for (const auto& x : s) cm.emplace_back(mpf_class(x.mpq(), kPrec));
        RPoly rest = s;
        for (const auto& z0 : z) {
            if (z0.imag() < -1e-9 * (1 + std::abs(z0))) continue;
            bool real = std::fabs(z0.imag()) <= 1e-9 * (1 + std::abs(z0));
            RPoly fac;
            if (real) {
                MpC r = mp_newton(cm, z0, true);
                Rational x = rationalize(r.re);
                fac = {-x, Rational(1)};
            } else {
                MpC r = mp_newton(cm, z0, false);
                mpf_class tr(2 * r.re, kPrec), nr(r.re * r.re + r.im * r.im, kPrec);
                fac = {rationalize(nr), -rationalize(tr), Rational(1)};
            }
            RPoly q;
            RPoly rem = rp_mod(rest, fac, &q);
            if (!rem.empty()) continue; // duplicate of a factor already taken, or not rational
            strip(q);
            rest = q;
            factors.push_back(fac);
        }
        if (rest.size() != 1) needs_float();
    }

    ClusterSet<Rational> out;
    std::size_t total = 0;
    for (const auto& fac : factors) {
        std::size_t m = 0;
        RPoly cur = a;
        for (;;) {
            RPoly q;
            RPoly rem = rp_mod(cur, fac, &q);
            if (!rem.empty()) break;
            strip(q);
            cur = q;
            ++m;
        }
        total += m * (fac.size() - 1);
        if (fac.size() == 2) {
            Rational x = -fac[0];
            out.clusters.push_back({{x + x, x * x, true}, m});
        } else {
            out.clusters.push_back({{-fac[1], fac[0], false}, m});
        }
    }
    if (total != a.size() - 1) needs_float();
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const auto& x, const auto& y) { return class_less(x.cls, y.cls); });
    return out;
}

} // namespace

template <>
ClusterSet<double> real_poly_complex_roots(const QPolynomial<double>& p, const Tolerance& tol) {
    auto pt = p.trimmed(tol, std::max(1.0, p.max_coeff()));
    if (!pt.degree() || *pt.degree() < 1)
        fail(ErrorCode::PreconditionViolated, "root finding needs degree >= 1");
    if (!pt.has_real_coeffs(tol)) fail(ErrorCode::NonRealResult, "polynomial is not real");
    return float_clusters(real_parts(pt), tol);
}

template <>
ClusterSet<Rational> real_poly_complex_roots(const QPolynomial<Rational>& p, const Tolerance&) {
    if (!p.degree() || *p.degree() < 1) fail(ErrorCode::PreconditionViolated, "root finding needs degree >= 1");
    if (!p.has_real_coeffs()) fail(ErrorCode::NonRealResult, "polynomial is not real");
    return exact_clusters(real_parts(p));
}

template <class S>
RootPair<S> roots_from_left_values(const Quat<S>& fa, const Quat<S>& fb, const Quat<S>& alpha,
                                   const Tolerance& tol, double scale) {
    Quat<S> ab = alpha.conj();
    Quat<S> s = fa + fb, d = fa - fb;
    if (s.is_zero(tol, scale) || d.is_zero(tol, scale))
        fail(ErrorCode::DegenerateEvaluations, "evaluations do not determine an isolated root");
    return {(ab * fa + alpha * fb) * s.inverse(), d.inverse() * (ab * fa - alpha * fb)};
}

template <class S>
RootPair<S> roots_from_right_values(const Quat<S>& ra, const Quat<S>& rb, const Quat<S>& alpha,
                                    const Tolerance& tol, double scale) {
    Quat<S> ab = alpha.conj();
    Quat<S> s = ra + rb, d = ra - rb;
    if (s.is_zero(tol, scale) || d.is_zero(tol, scale))
        fail(ErrorCode::DegenerateEvaluations, "evaluations do not determine an isolated root");
    return {(ra * ab - rb * alpha) * d.inverse(), s.inverse() * (ra * ab + rb * alpha)};
}

template <class S>
RootPair<S> in_class_roots_left_eval(const QPolynomial<S>& f, const Quat<S>& alpha, const Tolerance& tol) {
    double scale = eval_scale(f, alpha);
    Quat<S> fa = eval_left(f, alpha);
    if (fa.is_zero(tol, scale)) fail(ErrorCode::DegenerateEvaluations, "f vanishes at the probe point");
    return roots_from_left_values(fa, eval_left(f, alpha.conj()), alpha, tol, scale);
}

template <class S>
RootPair<S> in_class_roots_right_eval(const QPolynomial<S>& f, const Quat<S>& alpha, const Tolerance& tol) {
    double scale = eval_scale(f, alpha);
    Quat<S> ra = eval_right(f, alpha);
    if (ra.is_zero(tol, scale)) fail(ErrorCode::DegenerateEvaluations, "f vanishes at the probe point");
    return roots_from_right_values(ra, eval_right(f, alpha.conj()), alpha, tol, scale);
}

template <class S>
RootReport<S> find_all_roots(const QPolynomial<S>& f, const Tolerance& tol) {
    if (!f.degree() || *f.degree() < 1) fail(ErrorCode::PreconditionViolated, "root finding needs degree >= 1");
    auto clusters = real_poly_complex_roots(companion_real(f, tol), tol);
    RootReport<S> rep;
    rep.clusters_merged = clusters.merged;
    for (const auto& c : clusters.clusters) {
        RootEntry<S> e;
        e.cls = c.cls;
        e.multiplicity = c.multiplicity;
        if (c.cls.is_real) {
            e.kind = ZeroKind::Real;
            Quat<S> x(c.cls.trace / S(2));
            e.left_root = x;
            e.right_root = x;
        } else {
            Quat<S> a = class_point(c.cls);
            double scale = eval_scale(f, a);
            Quat<S> fa = eval_left(f, a), fb = eval_left(f, a.conj());
            if (fa.is_zero(tol, scale) && fb.is_zero(tol, scale)) {
                e.kind = ZeroKind::Spherical;
            } else {
                auto rp = roots_from_left_values(fa, fb, a, tol, scale);
                e.kind = ZeroKind::Isolated;
                e.left_root = rp.left;
                e.right_root = rp.right;
            }
        }
        rep.classes.push_back(std::move(e));
    }
    return rep;
}

template <class S>
Quat<S> some_left_root(const RootEntry<S>& e) {
    if (e.left_root) return *e.left_root;
    return class_point(e.cls);
}

template <class S>
LinearFactorization<S> factor_linear(const QPolynomial<S>& f, const Tolerance& tol) {
    if (f.is_zero()) fail(ErrorCode::PreconditionViolated, "cannot factor the zero polynomial");
    LinearFactorization<S> out;
    out.lead = f.leading();
    QPolynomial<S> g = monic_right(f);
    while (g.degree() && *g.degree() >= 1) {
        auto rep = find_all_roots(g, tol);
        Quat<S> gamma = some_left_root(rep.classes.front());
        out.roots.push_back(gamma);
        g = shift_left(g, gamma);
        if constexpr (!ScalarOps<S>::exact) g = monic_right(g);
    }
    return out;
}

#define QUATPOLY_INSTANTIATE(S)                                                                            \
    template RootPair<S> roots_from_left_values(const Quat<S>&, const Quat<S>&, const Quat<S>&,            \
                                                const Tolerance&, double);                                 \
    template RootPair<S> roots_from_right_values(const Quat<S>&, const Quat<S>&, const Quat<S>&,           \
                                                 const Tolerance&, double);                                \
    template RootPair<S> in_class_roots_left_eval(const QPolynomial<S>&, const Quat<S>&, const Tolerance&);  \
    template RootPair<S> in_class_roots_right_eval(const QPolynomial<S>&, const Quat<S>&, const Tolerance&); \
    template RootReport<S> find_all_roots(const QPolynomial<S>&, const Tolerance&);                        \
    template Quat<S> some_left_root(const RootEntry<S>&);                                                  \
    template LinearFactorization<S> factor_linear(const QPolynomial<S>&, const Tolerance&);

QUATPOLY_INSTANTIATE(Rational)
QUATPOLY_INSTANTIATE(double)

} // namespace quatpoly
