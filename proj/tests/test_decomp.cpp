#include <doctest.h>

#include "quatpoly/decomp.hpp"
#include "test_support.hpp"

using namespace qpt;

namespace {

std::vector<PR> part_polys(const IrreducibleDecomposition<R>& d) {
    std::vector<PR> v;
    for (const auto& p : d.parts) v.push_back(p.factor.poly);
    return v;
}

} // namespace

TEST_CASE("indecomposability") {
    auto a = is_indecomposable(P("(z-k)*(z-j)"), kExact);
    CHECK(a.indecomposable);
    CHECK(a.chain == std::vector<QR>{Q("k"), Q("j")});
    CHECK(!is_indecomposable(P("z^2+1"), kExact).indecomposable);
    CHECK(!is_indecomposable(P("(z-i)*(z-1-j)"), kExact).indecomposable);
    CHECK(is_indecomposable(P("(z-2)^3"), kExact).indecomposable);
    CHECK(!is_indecomposable(P("(z-2)*(z-3)"), kExact).indecomposable);

    Gen g(61);
    for (int t = 0; t < 40; ++t) {
        QR base = g.nonreal_quat(5, 3);
        std::vector<QR> chain{g.in_class(base)};
        while (chain.size() < static_cast<std::size_t>(g.integer(1, 4))) {
            QR b = g.in_class(base);
            if (b != chain.back().conj()) chain.push_back(b);
        }
        auto r = is_indecomposable(chain_product<R>(chain), kExact);
        CHECK(r.indecomposable);
        CHECK(r.chain == chain);
    }
}

TEST_CASE("decompose a pure spherical power") {
    auto d = decompose(P("z^2+1"), Side::Left, kExact);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].factor.poly == P("z-i"));
    CHECK(d.parts[1].factor.poly == P("z+i"));
    CHECK(d.parts[0].role == PartRole::SphericalPower);
    CHECK(d.spherical_classes == 1);
    CHECK(recombine(d, kExact) == P("z^2+1"));

    auto cube = decompose(P("(z^2+2*z+2)^3"), Side::Left, kExact);
    REQUIRE(cube.parts.size() == 2);
    CHECK(cube.parts[0].factor.poly == power(P("z+1-i"), 3));
    CHECK(recombine(cube, kExact) == P("(z^2+2*z+2)^3"));

    // no rational representative on the imaginary axis; any rational class point works
    auto irr = decompose(P("z^2+2"), Side::Left, kExact);
    REQUIRE(irr.parts.size() == 2);
    CHECK(irr.parts[0].factor.poly * irr.parts[1].factor.poly == P("z^2+2"));
    CHECK(recombine(irr, kExact) == P("z^2+2"));
}

TEST_CASE("decompose a chain times a spherical factor") {
    PR f = P("(z^2+1)*(z-k)*(z-j)");
    auto d = decompose(f, Side::Left, kExact);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].factor.poly == P("(z-k)*(z-j)*(z-j)"));
    CHECK(d.parts[0].role == PartRole::ChainExtension);
    CHECK(d.parts[1].factor.poly == P("z+k"));
    CHECK(d.parts[1].role == PartRole::ConjugatePower);
    CHECK(lrcm_general(part_polys(d), kExact).result == f);
}

TEST_CASE("decompose two isolated classes") {
    PR f = lrcm_distinct_classes<R>({make_indecomposable<R>({Q("i")}, kExact), make_indecomposable<R>({Q("1+j")}, kExact)},
                                    kExact);
    auto d = decompose(f, Side::Left, kExact);
    REQUIRE(d.parts.size() == 2);
    for (const auto& p : d.parts) CHECK(p.factor.degree() == 1);
    CHECK(lrcm_general(part_polys(d), kExact).result == f);
    CHECK(d.spherical_classes == 0);
    CHECK(d.classes == 2);
}

TEST_CASE("real powers stay whole") {
    auto d = decompose(P("(z-3)^2*(z-i)"), Side::Left, kExact);
    REQUIRE(d.parts.size() == 2);
    std::size_t n = 0;
    for (const auto& p : d.parts) {
        if (p.role != PartRole::RealPower) continue;
        ++n;
        CHECK(p.factor.poly == P("(z-3)^2"));
    }
    CHECK(n == 1);
}

TEST_CASE("decomposition invariants on both sides") {
    Gen g(62);
    for (int t = 0; t < 60; ++t) {
        PR f = constructed_poly(g, 6).f;
        for (Side side : {Side::Left, Side::Right}) {
            auto d = decompose(f, side, kExact);
            auto polys = part_polys(d);
            for (const auto& p : polys) CHECK(is_indecomposable(p, kExact).indecomposable);
            if (side == Side::Left) {
                CHECK(lrcm_general(polys, kExact).result == f);
            } else {
                CHECK(llcm_general(polys, kExact).result == f);
            }
            CHECK(recombine(d, kExact) == f);
            CHECK(d.parts.size() == d.classes + d.spherical_classes);
        }
    }
}

TEST_CASE("any admissible conjugate part recombines") {
    Gen g(63);
    for (int t = 0; t < 40; ++t) {
        QR a = g.nonreal_quat(4, 3);
        auto v = class_of(a, kExact);
        std::vector<QR> chain{g.in_class(a)};
        while (chain.size() < static_cast<std::size_t>(g.integer(1, 3))) {
            QR b = g.in_class(a);
            if (b != chain.back().conj()) chain.push_back(b);
        }
        std::size_t kappa = static_cast<std::size_t>(g.integer(1, 2));
        PR f = power(characteristic(v), kappa) * chain_product<R>(chain);
        auto d = decompose(f, Side::Left, kExact);
        REQUIRE(d.parts.size() == 2);
        // another degree-kappa indecomposable h with left zero != chain[0]
        std::vector<QR> h{g.in_class(a)};
        if (h[0] == chain.front()) continue;
        while (h.size() < kappa) {
            QR b = g.in_class(a);
            if (b != h.back().conj()) h.push_back(b);
        }
        CHECK(lrcm_general<R>({d.parts[0].factor.poly, chain_product<R>(h)}, kExact).result == f);
    }
}
