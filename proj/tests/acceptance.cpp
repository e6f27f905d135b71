// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "quatpoly/decomp.hpp"
#include "quatpoly/lcm.hpp"
#include "quatpoly/rootfind.hpp"
#include "quatpoly/series.hpp"
#include "quatpoly/spherical.hpp"
#include "test_support.hpp"

using namespace qpt;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure; keeps counting the rest.
struct Checker {
    Outcome out;
    std::size_t failures = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ == 0) out.detail = what;
        out.ok = false;
    }
    Outcome done(const std::string& summary) {
        if (out.ok) out.detail = summary;
        else out.detail += " (" + std::to_string(failures) + " failing checks)";
        return out;
    }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const char* kRootExample = "z^2 - z*(j + 2k) + 2i";
const char* kDegree7 = "z^7 - (1+i+j+k)*z^6 + (2-i+2j)*z^5 - (3+i+2j+2k)*z^4 + (1-2i+4j)*z^3"
                       " - (3-i+j+k)*z^2 + (2j-i)*z + i - 1";

std::string str(const QR& q) { return format_quaternion(q); }
std::string str(const PR& p) { return format_polynomial(p); }

Outcome root_example() {
    Checker c;
    PR f = P(kRootExample);
    auto t0 = Clock::now();
    auto rep = find_all_roots(f, kExact);
    double ms = ms_since(t0);
    c.expect(rep.classes.size() == 2, "expected two classes");
    if (rep.classes.size() == 2) {
        const auto& a = rep.classes[0];
        const auto& b = rep.classes[1];
        c.expect(a.cls.trace == R(0) && a.cls.norm2 == R(1), "first class is not (0,1)");
        c.expect(b.cls.trace == R(0) && b.cls.norm2 == R(4), "second class is not (0,4)");
        c.expect(a.kind == ZeroKind::Isolated && b.kind == ZeroKind::Isolated, "both classes must be isolated");
        c.expect(a.left_root == Q("j"), "left root in (0,1): " + (a.left_root ? str(*a.left_root) : "none"));
        c.expect(a.right_root == Q("(4k-3j)/5"), "right root in (0,1): " + (a.right_root ? str(*a.right_root) : "none"));
        c.expect(b.left_root == Q("(8j+6k)/5"), "left root in (0,4): " + (b.left_root ? str(*b.left_root) : "none"));
        c.expect(b.right_root == Q("2k"), "right root in (0,4): " + (b.right_root ? str(*b.right_root) : "none"));
    }
    c.expect(ms < 10.0, "took " + std::to_string(ms) + " ms");
    return c.done("4 roots bit-exact, " + std::to_string(ms) + " ms");
}

Outcome divisor_example() {
    Checker c;
    PR f = P(kDegree7);
    auto v = make_class<R>(R(0), R(1));
    auto t0 = Clock::now();
    auto d = spherical_divisors(f, v, kExact);
    double ms = ms_since(t0);
    c.expect(d.kappa == 2, "kappa = " + std::to_string(d.kappa));
    c.expect(d.left_chain == std::vector<QR>{Q("k"), Q("j")}, "left chain");
    c.expect(d.left_cofactor == P("z-1-i"), "left cofactor " + str(d.left_cofactor));
    c.expect(d.right_chain == std::vector<QR>{Q("(2i+j-2k)/3"), Q("(-2i+26j+29k)/39")}, "right chain");
    c.expect(d.right_cofactor == P("z-1-(5i+12k)/13"), "right cofactor " + str(d.right_cofactor));
    c.expect(ms < 50.0, "took " + std::to_string(ms) + " ms");
    return c.done("kappa 2, both chains and cofactors bit-exact, " + std::to_string(ms) + " ms");
}

Outcome lcm_example() {
    Checker c;
    PR g = P("(z-i)^2"), h = P("(z-1-j)^2");
    auto r = lrcm_general<R>({g, h}, kExact).result;
    PR expected = P("(z-i)^2 * (z-1+(12i+3j-4k)/13) * (z-1-(-1588i+2645j+980k)/3237)");
    c.expect(r == expected, "lrcm = " + str(r));
    c.expect(left_divides(g, r), "(z-i)^2 does not left-divide the result");
    c.expect(left_divides(h, r), "(z-1-j)^2 does not left-divide the result");
    return c.done("bit-exact, both inputs left-divide with zero remainder");
}

Outcome reconstruction_suite() {
    Checker c;
    Gen g(4004);
    auto t0 = Clock::now();
    std::size_t pairs = 0, trips = 0;
    for (int n = 0; n < 500; ++n) {
        auto built = constructed_poly(g, 8);
        QR lead = g.nonreal_quat(5, 3);
        PR f = built.f * lead;
        std::string tag = "#" + std::to_string(n) + " " + str(f);
        try {
            auto zs = zero_structure(f, kExact);
            std::vector<PrescribedDivisor<R>> divs;
            for (const auto& d : zs) {
                divs.push_back(left_prescribed(d));
                ++pairs;
                PR xk = power(characteristic(d.cls), d.kappa);
                c.expect(xk * chain_product<R>(d.left_chain) * d.left_cofactor == f, "left divisor identity " + tag);
                c.expect(d.right_cofactor * reversed_chain_product(d.right_chain) * xk == f,
                         "right divisor identity " + tag);
                if (d.left_chain.empty()) continue;
                auto lr = left_divisor_to_right(d.left_chain, d.left_cofactor, kExact);
                c.expect(lr.chain == d.right_chain && lr.cofactor == d.right_cofactor, "left-to-right conversion " + tag);
                auto rl = right_divisor_to_left(lr.chain, lr.cofactor, kExact);
                c.expect(rl.chain == d.left_chain && rl.cofactor == d.left_cofactor, "right-to-left round trip " + tag);
                ++trips;
            }
            PR s = synthesize_from_divisors(divs, kExact);
            c.expect(s * lead == f, "synthesis does not reproduce " + tag);
        } catch (const std::exception& e) {
            c.expect(false, std::string(e.what()) + " " + tag);
        }
    }
    double s = ms_since(t0) / 1000;
    c.expect(s < 60, "took " + std::to_string(s) + " s");
    std::ostringstream os;
    os << "500 polynomials, " << pairs << " class divisors, " << trips << " round trips, " << s << " s";
    return c.done(os.str());
}

Outcome evaluation_suite() {
    Checker c;
    Gen g(5005);
    double worst = 0;
    auto within = [&](const QD& a, const QD& b, double scale, const std::string& what) {
        double err = (a - b).abs() / scale;
        worst = std::max(worst, err);
        c.expect(err <= 1e-9, what + " relative error " + std::to_string(err));
    };
    for (int n = 0; n < 1000; ++n) {
        // exact split, both sides
        PR f = g.poly(static_cast<std::size_t>(g.integer(0, 8)));
        QR a = g.quat();
        c.expect(PR::constant(eval_left(f, a)) + rho(a) * shift_left(f, a) == f, "left split");
        c.expect(PR::constant(eval_right(f, a)) + shift_right(f, a) * rho(a) == f, "right split");

        // product rule
        PD ff = g.poly_f(static_cast<std::size_t>(g.integer(0, 6)));
        PD gg = g.poly_f(static_cast<std::size_t>(g.integer(0, 6)));
        QD x = g.quat_f(1.5);
        PD gf = gg * ff;
        double sc = eval_scale(gg, x) * eval_scale(ff, x) + 1e-300;
        within(eval_product_left(gg, ff, x, Tolerance{0}), eval_left(gf, x), sc, "left product rule");
        within(eval_product_right(gg, ff, x, Tolerance{0}), eval_right(gf, x), sc, "right product rule");

        // interpolation in one class
        QD al = g.quat_f(2.0);
        if (al.imag().abs() < 0.1) al.x1 += 0.5;
        auto unit = [&] {
            QD h = g.quat_f(1.0);
            return h / h.abs();
        };
        QD be = conjugate_by(unit(), al), ga = conjugate_by(unit(), al);
        double fs = eval_scale(ff, al);
        QD fa = eval_left(ff, al), fb = eval_left(ff, be), fab = eval_left(ff, al.conj());
        double s33 = fs * (1 + (ga - be).abs() / (al - be).abs() + (al - ga).abs() / (al - be).abs());
        double s34 = fs * 4 * (1 + al.abs()) / (al - be).abs();
        double s35 = fs * 4 * (1 + al.abs()) / ga.imag().abs();
        double s36 = fs * 4 * (1 + al.abs()) / al.imag().abs();
        within(interpolate_left(fa, fb, al, be, ga), eval_left(ff, ga), s33, "left interpolation");
        within(interpolate_right(fa, fb, al, be, ga), eval_right(ff, ga), s34, "right interpolation");
        within(interpolate_left_conj(fa, fab, al, ga), eval_left(ff, ga), s35, "left interpolation, conjugate pair");
        within(interpolate_right_conj(fa, fab, al, ga), eval_right(ff, ga), s36, "right interpolation, conjugate pair");
    }
    std::ostringstream os;
    os << "1000 cases, exact splits, worst scaled float error " << worst;
    return c.done(os.str());
}

Outcome minimality_oracle() {
    Checker c;
    Gen g(6006);
    const std::vector<QR> sample = {Q("i"),       Q("j"),        Q("k"),          Q("-i"),   Q("1+j"),
                                    Q("1-j"),     Q("1+i"),      Q("(3i+4k)/5"),  Q("(3j-4k)/5"), Q("2"),
                                    Q("-1"),      Q("i+j"),      Q("(1+i+j+k)/2"), Q("1+2k"), Q("(1-i+j-k)/2")};
    auto t0 = Clock::now();
    std::size_t shortcut = 0;
    for (int n = 0; n < 100; ++n) {
        std::size_t members = static_cast<std::size_t>(g.integer(2, 3));
        std::size_t budget = 6;
        std::vector<PR> gs;
        for (std::size_t m = 0; m < members; ++m) {
            std::size_t left = members - m - 1;
            std::size_t deg = static_cast<std::size_t>(g.integer(1, long(budget - left)));
            budget -= deg;
            std::vector<QR> roots;
            for (std::size_t t = 0; t < deg; ++t) roots.push_back(g.pick(sample));
            PR p = chain_product<R>(roots);
            if (g.coin(0.3)) p = p * g.pick(sample);
            gs.push_back(p);
        }
        std::string tag = "#" + std::to_string(n);
        for (const auto& p : gs) tag += " [" + str(p) + "]";
        try {
            auto r = lrcm_general(gs, kExact).result;
            c.expect(r.is_monic(), "result not monic " + tag);
            for (const auto& p : gs) c.expect(left_divides(p, r), "not a common right multiple " + tag);
            std::size_t D = r.deg0(), d0 = gs[0].deg0(), lo = 0, total = 0;
            for (const auto& p : gs) lo = std::max(lo, p.deg0()), total += p.deg0();
            if (D < total) ++shortcut;
            bool found = false;
            for (std::size_t d = lo; d <= D && !found; ++d) {
                std::size_t nul = common_multiple_nullity(gs, d - d0);
                if (nul > 0) {
                    found = true;
                    c.expect(d == D, "brute force finds a common multiple of degree " + std::to_string(d) + " < " +
                                         std::to_string(D) + " " + tag);
                    if (d == D) c.expect(nul == 4, "solution space at the minimal degree is not one quaternion line " + tag);
                }
            }
            c.expect(found, "brute force finds nothing up to the result degree " + tag);
        } catch (const std::exception& e) {
            c.expect(false, std::string(e.what()) + " " + tag);
        }
    }
    double s = ms_since(t0) / 1000;
    c.expect(s < 120, "took " + std::to_string(s) + " s");
    return c.done("100 families minimal (" + std::to_string(shortcut) + " below the degree sum), " + std::to_string(s) + " s");
}

Outcome shift_certification() {
    Checker c;
    Gen g(7007);
    for (int n = 0; n < 200; ++n) {
        PR f = g.poly(static_cast<std::size_t>(g.integer(0, 8)));
        QR a = g.nonreal_quat();
        auto v = class_of(a, kExact);
        PR s = spherical_shift(f, v);
        c.expect(s == shift_left(shift_left(f, a.conj()), a), "S_V f != L_a L_conj(a) f");
        c.expect(s == shift_right(shift_right(f, a.conj()), a), "S_V f != R_a R_conj(a) f");
    }
    auto vi = make_class<R>(R(0), R(1));
    PR f = P(kDegree7);
    PR s1 = spherical_shift(f, vi), s2 = spherical_shift(s1, vi);
    c.expect(s1 == P("z^5-(1+i+j+k)*z^4+(1-i+2j)*z^3-(2+j+k)*z^2+(2j-i)*z+i-1"), "S f = " + str(s1));
    c.expect(s2 == P("z^3-(1+i+j+k)*z^2-(i-2j)*z+i-1"), "S^2 f = " + str(s2));
    return c.done("200 random cases on both sides, worked-example shifts bit-exact");
}

Outcome decomposition_suite() {
    Checker c;
    Gen g(8008);
    std::size_t parts = 0, spherical = 0;
    for (int n = 0; n < 200; ++n) {
        PR f = constructed_poly(g, 6).f;
        std::string tag = "#" + std::to_string(n) + " " + str(f);
        try {
            auto d = decompose(f, Side::Left, kExact);
            std::vector<PR> polys;
            for (const auto& p : d.parts) {
                polys.push_back(p.factor.poly);
                c.expect(is_indecomposable(p.factor.poly, kExact).indecomposable, "part not indecomposable " + tag);
            }
            for (std::size_t a = 0; a < d.parts.size(); ++a)
                for (std::size_t b = a + 1; b < d.parts.size(); ++b) {
                    const auto& pa = d.parts[a].factor;
                    const auto& pb = d.parts[b].factor;
                    if (!same_class(pa.cls, pb.cls, kExact)) continue;
                    c.expect(!eval_left(pb.poly, pa.chain.front()).is_exact_zero() &&
                                 !eval_left(pa.poly, pb.chain.front()).is_exact_zero(),
                             "parts share a left zero " + tag);
                }
            c.expect(lrcm_general(polys, kExact).result == f, "parts do not recombine " + tag);
            auto zs = zero_structure(f, kExact);
            std::size_t m = 0;
            for (const auto& z : zs) m += z.kappa > 0 ? 1 : 0;
            parts += d.parts.size();
            spherical += m;
            c.expect(d.parts.size() == m + zs.size(), "part count " + std::to_string(d.parts.size()) + " != m+n " + tag);
        } catch (const std::exception& e) {
            c.expect(false, std::string(e.what()) + " " + tag);
        }
    }
    return c.done("200 polynomials, " + std::to_string(parts) + " parts, " + std::to_string(spherical) +
                  " spherical classes");
}

Outcome blaschke_suite() {
    Checker c;
    Gen g(9009);
    double worst = 0;
    std::size_t steps = 0;
    for (int n = 0; n < 100; ++n) {
        std::size_t m = static_cast<std::size_t>(g.integer(1, 4));
        std::vector<QR> roots;
        for (std::size_t t = 0; t < m; ++t) roots.push_back(g.ball_point(R(3, 4)));
        std::string tag = "#" + std::to_string(n);
        try {
            auto ex = complete_to_blaschke(roots, kExact);
            for (const auto& s : ex.steps) {
                ++steps;
                c.expect(step_lhs(s) == step_rhs(s), "step identity " + tag);
                c.expect(s.phi.norm2() == R(1) && s.phi_next.norm2() == R(1), "phase not unimodular " + tag);
            }
            c.expect(ex.phase.norm2() == R(1), "final phase not unimodular " + tag);
            std::vector<QD> rf;
            for (const auto& r : roots) rf.push_back(convert<double>(r));
            auto fl = complete_to_blaschke(rf);
            auto [lhs, rhs] = blaschke_identity_sides(rf, fl, 30);
            double err = max_abs_diff(lhs, rhs);
            worst = std::max(worst, err);
            c.expect(err <= 1e-10, "series identity error " + std::to_string(err) + " " + tag);
            c.expect(std::fabs(fl.phase.abs() - 1) <= 1e-12, "float phase drift " + tag);
        } catch (const std::exception& e) {
            c.expect(false, std::string(e.what()) + " " + tag);
        }
    }
    for (int n = 0; n < 100; ++n) {
        QR a = g.ball_point(R(3, 4)), d = g.quat(), cc = g.quat();
        std::size_t k = static_cast<std::size_t>(g.integer(1, 8));
        auto [l, r] = norm_preservation_check(a, d, cc, k);
        c.expect(l == r, "norm preservation fails");
    }
    std::ostringstream os;
    os << "100 root lists, " << steps << " exact steps, worst series error " << worst << ", 100 norm checks";
    return c.done(os.str());
}

struct FloatClass {
    double re, im; // im = 0 for real
    int kind;      // 0 isolated, 1 spherical, 2 real
};

Outcome robustness_suite() {
    Checker c;
    Gen g(10010);
    auto t0 = Clock::now();
    double worst = 0;
    std::size_t kinds[3] = {0, 0, 0};
    for (int n = 0; n < 300; ++n) {
        std::size_t deg = 0, target = static_cast<std::size_t>(g.integer(1, 10));
        std::vector<FloatClass> cls;
        std::vector<PD> factors;
        while (deg < target) {
            int kind = static_cast<int>(g.integer(0, 2));
            if (kind == 1 && deg + 2 > target) kind = 0;
            FloatClass fc{g.real(-2, 2), kind == 2 ? 0.0 : g.real(0.05, 2), kind};
            bool clear = true;
            for (const auto& o : cls) clear = clear && std::hypot(o.re - fc.re, o.im - fc.im) >= 0.05;
            if (!clear) continue;
            cls.push_back(fc);
            ++kinds[kind];
            QD u = g.quat_f(1);
            u.x0 = 0;
            if (u.abs() < 1e-3) u = QD::i();
            u = u / u.abs();
            QD point = QD(fc.re) + u * fc.im;
            if (kind == 0) factors.push_back(rho(point)), deg += 1;
            if (kind == 1) factors.push_back(characteristic(class_of(point))), deg += 2;
            if (kind == 2) factors.push_back(rho(QD(fc.re))), deg += 1;
        }
        std::shuffle(factors.begin(), factors.end(), g.rng);
        PD f = PD::one();
        for (const auto& p : factors) f = f * p;
        QD lead = g.quat_f(1);
        if (lead.abs() < 0.2) lead.x0 += 1;
        f = f * lead;
        std::string tag = "#" + std::to_string(n) + " " + format_polynomial(f);
        try {
            auto rep = find_all_roots(f);
            c.expect(rep.classes.size() == cls.size(),
                     "found " + std::to_string(rep.classes.size()) + " classes, built " + std::to_string(cls.size()) + " " + tag);
            double coef = 0;
            for (const auto& q : f.coeffs()) coef += q.abs();
            for (const auto& e : rep.classes) {
                double re = e.cls.trace / 2, im = std::sqrt(std::max(0.0, e.cls.norm2 - re * re));
                const FloatClass* best = nullptr;
                double bd = 1e300;
                for (const auto& o : cls) {
                    double dd = std::hypot(o.re - re, o.im - im);
                    if (dd < bd) bd = dd, best = &o;
                }
                c.expect(bd < 1e-6, "reported class far from every built class " + tag);
                if (!best) continue;
                ZeroKind want = best->kind == 0 ? ZeroKind::Isolated : best->kind == 1 ? ZeroKind::Spherical : ZeroKind::Real;
                c.expect(e.kind == want, std::string("classified ") + zero_kind_name(e.kind) + ", built " +
                                             zero_kind_name(want) + " " + tag);
                if (e.kind != ZeroKind::Isolated) continue;
                for (bool left : {true, false}) {
                    QD gm = left ? *e.left_root : *e.right_root;
                    double bound = 1e-8 * coef * std::pow(std::max(1.0, gm.abs()), double(f.deg0()));
                    double res = (left ? eval_left(f, gm) : eval_right(f, gm)).abs();
                    worst = std::max(worst, res / bound * 1e-8);
                    c.expect(res <= bound, std::string(left ? "left" : "right") + " residual " + std::to_string(res) + " " + tag);
                }
            }
        } catch (const std::exception& e) {
            c.expect(false, std::string(e.what()) + " " + tag);
        }
    }
    double s = ms_since(t0) / 1000;
    c.expect(s < 30, "took " + std::to_string(s) + " s");
    std::ostringstream os;
    os << "300 polynomials (" << kinds[0] << " isolated, " << kinds[1] << " spherical, " << kinds[2]
       << " real classes), worst scaled residual " << worst << ", " << s << " s";
    return c.done(os.str());
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {"root example", root_example},
        {"spherical divisor example", divisor_example},
        {"lcm example", lcm_example},
        {"reconstruction suite", reconstruction_suite},
        {"evaluation identities", evaluation_suite},
        {"lcm minimality oracle", minimality_oracle},
        {"spherical shift certification", shift_certification},
        {"decomposition suite", decomposition_suite},
        {"Blaschke completion", blaschke_suite},
        {"root finder robustness", robustness_suite},
    };
    int failed = 0, idx = 0;
    for (const auto& cr : all) {
        ++idx;
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double ms = ms_since(t0);
        if (!o.ok) ++failed;
        std::printf("[%s] %2d %-30s %9.1f ms  %s\n", o.ok ? "PASS" : "FAIL", idx, cr.name, ms, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
