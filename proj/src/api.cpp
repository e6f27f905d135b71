#include "quatpoly/api.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <type_traits>

#include "quatpoly/decomp.hpp"
#include "quatpoly/lcm.hpp"
#include "quatpoly/rootfind.hpp"
#include "quatpoly/series.hpp"
#include "quatpoly/spherical.hpp"
#include "quatpoly/text.hpp"

namespace quatpoly {

namespace {

template <class F>
Json with_backend(const RunConfig& cfg, F&& body) {
    if (cfg.backend == Backend::Exact) return body(std::type_identity<Rational>{});
    return body(std::type_identity<double>{});
}

template <class S>
Json scalar_json(const S& x) {
    if constexpr (std::is_same_v<S, Rational>) return x.str();
    else return x;
}

template <class S>
Json quat_json(const Quat<S>& q) {
    return {{"text", format_quaternion(q)},
            {"components", Json::array({scalar_json(q.x0), scalar_json(q.x1), scalar_json(q.x2), scalar_json(q.x3)})}};
}

template <class S>
Json quat_list_json(const std::vector<Quat<S>>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(quat_json(q));
    return a;
}

template <class S>
Json poly_json(const QPolynomial<S>& f) {
    Json c = Json::array();
    for (const auto& q : f.coeffs()) c.push_back(format_quaternion(q));
    return {{"text", format_polynomial(f)}, {"coeffs", c}};
}

template <class S>
Json class_json(const ConjugacyClass<S>& v) {
    return {{"trace", scalar_json(v.trace)}, {"norm2", scalar_json(v.norm2)}, {"real", v.is_real}};
}

template <class S>
bool matches(const QPolynomial<S>& a, const QPolynomial<S>& b, const Tolerance& tol) {
    if constexpr (ScalarOps<S>::exact) return a == b;
    else return approx_equal(a, b, tol);
}

const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "float64"; }

} // namespace

Json api_eval(const RunConfig& cfg, const std::string& poly, const std::string& point) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto a = parse_quaternion<S>(point);
        Quat<S> v = cfg.side == Side::Left ? eval_left(f, a) : eval_right(f, a);
        return Json{{"side", side_name(cfg.side)}, {"value", quat_json(v)}};
    });
}

Json api_roots(const RunConfig& cfg, const std::string& poly) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto rep = find_all_roots(f, cfg.tolerance());
        Json classes = Json::array();
        for (const auto& e : rep.classes) {
            Json c{{"class", class_json(e.cls)}, {"kind", zero_kind_name(e.kind)}, {"multiplicity", e.multiplicity}};
            c["left_root"] = e.left_root ? quat_json(*e.left_root) : Json(nullptr);
            c["right_root"] = e.right_root ? quat_json(*e.right_root) : Json(nullptr);
            classes.push_back(c);
        }
        return Json{{"backend", backend_name(cfg.backend)},
                    {"polynomial", poly_json(f)},
                    {"classes", classes},
                    {"clusters_merged", rep.clusters_merged}};
    });
}

Json api_factor(const RunConfig& cfg, const std::string& poly) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto lf = factor_linear(f, cfg.tolerance());
        auto back = chain_product<S>(lf.roots) * lf.lead;
        return Json{{"roots", quat_list_json(lf.roots)},
                    {"lead", quat_json(lf.lead)},
                    {"product", poly_json(back)},
                    {"max_error", max_abs_diff(back, f)}};
    });
}

Json api_divisors(const RunConfig& cfg, const std::string& poly, const std::optional<std::string>& point) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto tol = cfg.tolerance();
        std::vector<SphericalDivisorPair<S>> pairs;
        if (point) {
            auto a = parse_quaternion<S>(*point);
            pairs.push_back(spherical_divisors(f, class_of(a, tol), tol));
        } else {
            pairs = zero_structure(f, tol);
        }
        Json out = Json::array();
        for (const auto& d : pairs) {
            out.push_back({{"class", class_json(d.cls)},
                           {"kappa", d.kappa},
                           {"left_chain", quat_list_json(d.left_chain)},
                           {"left_cofactor", poly_json(d.left_cofactor)},
                           {"left_divisor", poly_json(d.left_divisor())},
                           {"right_chain", quat_list_json(d.right_chain)},
                           {"right_cofactor", poly_json(d.right_cofactor)},
                           {"right_divisor", poly_json(d.right_divisor())}});
        }
        return Json{{"divisors", out}};
    });
}

Json api_mult(const RunConfig& cfg, const std::string& poly, const std::string& point) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto a = parse_quaternion<S>(point);
        auto tol = cfg.tolerance();
        auto v = class_of(a, tol);
        Json j{{"point", quat_json(a)},
               {"left", mult_left(a, f, tol)},
               {"right", mult_right(a, f, tol)},
               {"class", class_json(v)}};
        j["spherical"] = v.is_real ? Json(nullptr) : Json(mult_spherical(v, f, tol, std::optional<Quat<S>>(a)));
        return j;
    });
}

Json api_lcm(const RunConfig& cfg, const std::vector<std::string>& polys) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        std::vector<QPolynomial<S>> fs;
        for (const auto& p : polys) fs.push_back(parse_polynomial<S>(p));
        auto tol = cfg.tolerance();
        bool right_multiple = cfg.side == Side::Left;
        auto r = right_multiple ? lrcm_general(fs, tol) : llcm_general(fs, tol);
        Json q = Json::array();
        for (const auto& x : r.quotients) q.push_back(poly_json(x));
        return Json{{"kind", right_multiple ? "lrcm" : "llcm"},
                    {"result", poly_json(r.result)},
                    {"degree", r.result.deg0()},
                    {"quotients", q}};
    });
}

Json api_decompose(const RunConfig& cfg, const std::string& poly) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto f = parse_polynomial<S>(poly);
        auto tol = cfg.tolerance();
        auto d = decompose(f, cfg.side, tol);
        Json parts = Json::array();
        for (const auto& p : d.parts)
            parts.push_back({{"role", part_role_name(p.role)},
                             {"class", class_json(p.factor.cls)},
                             {"chain", quat_list_json(p.factor.chain)},
                             {"polynomial", poly_json(p.factor.poly)}});
        auto back = recombine(d, tol);
        return Json{{"side", side_name(d.side)},
                    {"parts", parts},
                    {"unit", quat_json(d.unit)},
                    {"classes", d.classes},
                    {"spherical_classes", d.spherical_classes},
                    {"recombines", matches(back, f, tol)}};
    });
}

Json api_blaschke(const RunConfig& cfg, const std::string& roots) {
    return with_backend(cfg, [&]<class S>(std::type_identity<S>) {
        auto a = parse_quaternion_list<S>(roots);
        auto c = complete_to_blaschke(a, cfg.tolerance());
        auto [lhs, rhs] = blaschke_identity_sides(a, c, cfg.order);
        return Json{{"betas", quat_list_json(c.betas)},
                    {"gammas", quat_list_json(c.gammas)},
                    {"phase", quat_json(c.phase)},
                    {"central", c.central},
                    {"order", cfg.order},
                    {"residual_norm", max_abs_diff(lhs, rhs)},
                    {"phase_drift", c.phase_drift},
                    {"phase_check", c.phase_check}};
    });
}

namespace {

using R = Rational;
using QR = Quat<R>;
using PR = QPolynomial<R>;

PR P(const char* s) { return parse_polynomial<R>(s); }
QR Q(const char* s) { return parse_quaternion<R>(s); }

struct GoldenCase {
    std::string name;
    std::string expected;
    std::function<std::string()> actual;
};

std::string chain_text(const std::vector<QR>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + format_quaternion(c[i]);
    return s + "]";
}

std::string canonical_chain(const char* s) { return chain_text(parse_quaternion_list<R>(s)); }

const char* kRootExample = "z^2 - z*(j + 2k) + 2i";
const char* kDegree7 = "z^7 - (1+i+j+k)*z^6 + (2-i+2j)*z^5 - (3+i+2j+2k)*z^4 + (1-2i+4j)*z^3"
                       " - (3-i+j+k)*z^2 + (2j-i)*z + i - 1";

std::string root_of(const char* poly, int norm2, bool left) {
    auto rep = find_all_roots(P(poly), Tolerance{0});
    for (const auto& e : rep.classes)
        if (e.cls.trace == R(0) && e.cls.norm2 == R(norm2)) {
            const auto& r = left ? e.left_root : e.right_root;
            return r ? format_quaternion(*r) : "none";
        }
    return "missing";
}

std::vector<GoldenCase> golden_cases() {
    auto vi = make_class<R>(R(0), R(1));
    std::vector<GoldenCase> c;
    c.push_back({"eval_left z^2+1 at i", "0", [] { return format_quaternion(eval_left(P("z^2+1"), Q("i"))); }});
    c.push_back({"roots example: f f#", format_polynomial(P("z^4+5*z^2+4")),
                 [] { return format_polynomial(P(kRootExample) * sharp(P(kRootExample))); }});
    c.push_back({"roots example: f(i) left", format_quaternion(Q("-1+2i+2j-k")),
                 [] { return format_quaternion(eval_left(P(kRootExample), Q("i"))); }});
    c.push_back({"roots example: left root in [i]", format_quaternion(Q("j")), [] { return root_of(kRootExample, 1, true); }});
    c.push_back({"roots example: right root in [i]", format_quaternion(Q("(4k-3j)/5")),
                 [] { return root_of(kRootExample, 1, false); }});
    c.push_back({"roots example: left root in [2i]", format_quaternion(Q("(8j+6k)/5")),
                 [] { return root_of(kRootExample, 4, true); }});
    c.push_back({"roots example: right root in [2i]", format_quaternion(Q("2k")),
                 [] { return root_of(kRootExample, 4, false); }});
    c.push_back({"degree 7: f f#", format_polynomial(P("(z^2+1)^6 * (z^2-2*z+2)")),
                 [] { return format_polynomial(P(kDegree7) * sharp(P(kDegree7))); }});
    c.push_back({"degree 7: f''(i) left", format_quaternion(Q("-8-8i-8j-24k")),
                 [] { return format_quaternion(eval_left(derivative(P(kDegree7), 2), Q("i"))); }});
    c.push_back({"degree 7: S f", format_polynomial(P("z^5-(1+i+j+k)*z^4+(1-i+2j)*z^3-(2+j+k)*z^2+(2j-i)*z+i-1")),
                 [vi] { return format_polynomial(spherical_shift(P(kDegree7), vi)); }});
    c.push_back({"degree 7: S^2 f", format_polynomial(P("z^3-(1+i+j+k)*z^2-(i-2j)*z+i-1")),
                 [vi] { return format_polynomial(spherical_shift(spherical_shift(P(kDegree7), vi), vi)); }});
    c.push_back({"degree 7: L_k S^2 f", format_polynomial(P("z^2-(1+i+j)*z+j-k")), [vi] {
                     return format_polynomial(shift_left(spherical_shift(spherical_shift(P(kDegree7), vi), vi), Q("k")));
                 }});
    auto divisor = [vi] { return spherical_divisors(P(kDegree7), vi, Tolerance{0}); };
    c.push_back({"degree 7: kappa", "2", [divisor] { return std::to_string(divisor().kappa); }});
    c.push_back({"degree 7: left chain", canonical_chain("k, j"), [divisor] { return chain_text(divisor().left_chain); }});
    c.push_back({"degree 7: left cofactor", format_polynomial(P("z-1-i")),
                 [divisor] { return format_polynomial(divisor().left_cofactor); }});
    c.push_back({"degree 7: right chain", canonical_chain("(2i+j-2k)/3, (-2i+26j+29k)/39"),
                 [divisor] { return chain_text(divisor().right_chain); }});
    c.push_back({"degree 7: right cofactor", format_polynomial(P("z-1-(5i+12k)/13")),
                 [divisor] { return format_polynomial(divisor().right_cofactor); }});
    c.push_back({"commute j past z-1-i", format_quaternion(Q("(2i+j-2k)/3")),
                 [] { return format_quaternion(commute_factor_left_to_right(Q("j"), P("z-1-i"), Tolerance{0}).beta); }});
    c.push_back({"lrcm((z-i)^2, (z-1-j)^2)",
                 format_polynomial(P("(z-i)^2 * (z-1+(12i+3j-4k)/13)*(z-1-(-1588i+2645j+980k)/3237)")), [] {
                     return format_polynomial(lrcm_general<R>({P("(z-i)^2"), P("(z-1-j)^2")}, Tolerance{0}).result);
                 }});
    c.push_back({"blaschke factor b_{i/2}, order 3", canonical_chain("-i/2, 3/4, -3i/8, -3/16"), [] {
                     auto s = blaschke_factor(Q("i/2"), 3);
                     return chain_text(s.coeffs());
                 }});
    c.push_back({"norm preservation i/2, 1, j, 3", "2 2", [] {
                     auto [l, r] = norm_preservation_check(Q("i/2"), Q("1"), Q("j"), 3);
                     return l.str() + " " + r.str();
                 }});
    return c;
}

} // namespace

Json api_golden(const RunConfig&) {
    Json cases = Json::array();
    bool all = true;
    for (const auto& gc : golden_cases()) {
        std::string got;
        try {
            got = gc.actual();
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        bool ok = got == gc.expected;
        all = all && ok;
        Json j{{"name", gc.name}, {"ok", ok}, {"expected", gc.expected}};
        if (!ok) j["actual"] = got;
        cases.push_back(j);
    }
    return Json{{"passed", all}, {"cases", cases}};
}

namespace {

bool text_like(const Json& j) { return j.is_object() && j.contains("text") && j.size() <= 2; }

bool is_leaf(const Json& j) { return !j.is_structured() || text_like(j); }

std::string leaf(const Json& j) {
    if (text_like(j)) return j["text"].get<std::string>();
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_value(std::ostream& os, const Json& j, int indent);

void render_object(std::ostream& os, const Json& j, int indent, bool first_inline) {
    std::string pad(indent, ' ');
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!(first && first_inline)) os << pad;
        os << it.key() << ":";
        render_value(os, it.value(), indent + 2);
        first = false;
    }
}

void render_value(std::ostream& os, const Json& j, int indent) {
    if (is_leaf(j)) {
        os << " " << leaf(j) << "\n";
    } else if (j.is_object()) {
        os << "\n";
        render_object(os, j, indent, false);
    } else if (std::all_of(j.begin(), j.end(), is_leaf)) {
        os << " [";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << leaf(j[i]);
        os << "]\n";
    } else {
        os << "\n";
        for (const auto& e : j) {
            os << std::string(indent, ' ') << "- ";
            if (e.is_object() && !text_like(e)) render_object(os, e, indent + 2, true);
            else os << leaf(e) << "\n";
        }
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    if (j.is_object() && !text_like(j)) render_object(os, j, 0, false);
    else render_value(os, j, 0);
    return os.str();
}

Json error_json(const std::exception& e) {
    if (auto* qe = dynamic_cast<const Error*>(&e)) return {{"error", error_code_name(qe->code())}, {"message", qe->what()}};
    return {{"error", "Internal"}, {"message", e.what()}};
}

} // namespace quatpoly
