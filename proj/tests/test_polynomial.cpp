#include <doctest.h>

#include "test_support.hpp"

using namespace qpt;

namespace {
const char* kDegree7 = "z^7 - (1+i+j+k)*z^6 + (2-i+2j)*z^5 - (3+i+2j+2k)*z^4 + (1-2i+4j)*z^3"
                       " - (3-i+j+k)*z^2 + (2j-i)*z + i - 1";
}

TEST_CASE("construction and degree") {
    PR zero;
    CHECK(zero.is_zero());
    CHECK(!zero.degree().has_value());
    CHECK(PR({QR(R(1)), QR(), QR()}).degree() == 0u);
    CHECK(P("z^3 + i").degree() == 3u);
    CHECK(P("z^3 - z^3").is_zero());
}

TEST_CASE("products") {
    CHECK(P("(z-i)*(z-j)") == P("z^2 - (i+j)*z + k"));
    QR a = Q("1+2i-j+3k");
    CHECK(rho(a) * rho(a.conj()) == characteristic(class_of(a, kExact)));
    CHECK(P("z^2+i") * PR::one() == P("z^2+i"));
}

TEST_CASE("sharp") {
    CHECK(sharp(P("z-i")) == P("z+i"));
    CHECK(sharp(P("z^2 - (i+j)*z + k")) == P("z^2 + (i+j)*z - k"));
    CHECK(sharp(P("z^3 - 2*z + 5")) == P("z^3 - 2*z + 5"));
    Gen g(21);
    for (int t = 0; t < 100; ++t) {
        PR f = g.poly(3), h = g.poly(2);
        CHECK(sharp(f * h) == sharp(h) * sharp(f));
        CHECK(f * sharp(f) == sharp(f) * f);
        CHECK((f * sharp(f)).has_real_coeffs(kExact));
    }
}

TEST_CASE("evaluation") {
    PR f = P("(z-i)*(z-j)");
    CHECK(eval_left(f, Q("i")).is_exact_zero());
    CHECK(eval_left(f, Q("j")) == Q("2k"));
    CHECK(eval_right(f, Q("j")).is_exact_zero());
    CHECK(eval_left(P("z^2 - z*(j+2k) + 2i"), Q("i")) == Q("-1+2i+2j-k"));
}

TEST_CASE("backward shifts") {
    CHECK(shift_left(P("z^2+1"), Q("i")) == P("z+i"));
    CHECK(shift_left(P("3+i"), Q("j")).is_zero());
    CHECK(shift_left(P("z^3-(1+i+j+k)*z^2-(i-2j)*z+i-1"), Q("k")) == P("z^2-(1+i+j)*z+j-k"));
    Gen g(22);
    for (int t = 0; t < 200; ++t) {
        PR f = g.poly(static_cast<std::size_t>(g.integer(0, 6)));
        QR a = g.quat();
        CHECK(PR::constant(eval_left(f, a)) + rho(a) * shift_left(f, a) == f);
        CHECK(PR::constant(eval_right(f, a)) + shift_right(f, a) * rho(a) == f);
    }
}

TEST_CASE("division") {
    auto d = divide_right(P("z^2+1"), P("z-i"), kExact);
    CHECK(d.quotient == P("z+i"));
    CHECK(d.remainder.is_zero());
    PR f = P("(z-i)*(z-j)");
    auto r = divide_right(f, P("z-j"), kExact);
    CHECK(!r.remainder.is_zero());
    CHECK(P("z-j") * r.quotient + r.remainder == f);
    auto l = divide_left(f, P("z-j"), kExact);
    CHECK(l.quotient == P("z-i"));
    CHECK(l.remainder.is_zero());
    CHECK_THROWS_AS(divide_right(f, PR(), kExact), Error);

    Gen g(23);
    for (int t = 0; t < 100; ++t) {
        PR a = g.poly(static_cast<std::size_t>(g.integer(0, 6))), b = g.poly(static_cast<std::size_t>(g.integer(0, 3)));
        auto rr = divide_right(a, b, kExact);
        CHECK(b * rr.quotient + rr.remainder == a);
        CHECK((rr.remainder.is_zero() || rr.remainder.deg0() < b.deg0()));
        auto ll = divide_left(a, b, kExact);
        CHECK(ll.quotient * b + ll.remainder == a);
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(P("z^2+1")) == P("2*z"));
    CHECK(eval_left(derivative(P(kDegree7), 2), Q("i")) == Q("-8-8i-8j-24k"));
    CHECK(derivative(P("z^2+1"), 3).is_zero());
}

TEST_CASE("multiplicities") {
    PR f = P("(z-i)*(z-j)*(z+j)");
    CHECK(mult_left(Q("i"), f, kExact) == 2);
    CHECK(mult_right(Q("-j"), f, kExact) == 1);
    CHECK(mult_spherical(make_class<R>(R(0), R(1)), f, kExact) == 1);
    CHECK(mult_left(Q("1+i"), rho(Q("1+i")), kExact) == 1);
    CHECK(mult_spherical(make_class<R>(R(0), R(1)), power(P("z^2+1"), 3), kExact) == 3);

    // spherical multiplicity is the minimum left multiplicity over the class
    Gen g(24);
    for (int t = 0; t < 40; ++t) {
        QR a = g.nonreal_quat(4, 2);
        auto v = class_of(a, kExact);
        std::size_t kappa = static_cast<std::size_t>(g.integer(0, 2));
        std::vector<QR> chain;
        for (int s = 0; s < g.integer(0, 2); ++s) chain.push_back(g.in_class(a));
        PR h = power(characteristic(v), kappa) * chain_product<R>(chain) * P("z-7");
        std::size_t low = 100;
        for (int s = 0; s < 4; ++s) low = std::min(low, mult_left(g.in_class(a), h, kExact));
        low = std::min(low, mult_left(a, h, kExact));
        low = std::min(low, mult_left(a.conj(), h, kExact));
        CHECK(mult_spherical(v, h, kExact) == low);
    }
}

TEST_CASE("companion") {
    CHECK(companion_real(P("z^2 - z*(j+2k) + 2i"), kExact) == P("z^4+5*z^2+4"));
    CHECK(companion_real(P(kDegree7), kExact) == P("(z^2+1)^6 * (z^2-2*z+2)"));
    CHECK(companion_real(P("z^2-3*z+1"), kExact) == P("(z^2-3*z+1)^2"));
}

TEST_CASE("product rule") {
    CHECK(eval_product_left(P("z-i"), P("z-j"), Q("j"), kExact) == Q("2k"));
    CHECK(eval_product_left(P("z-i"), P("z^3+j"), Q("i"), kExact).is_exact_zero());
    CHECK(eval_product_left(P("z^2+3"), P("z-k"), Q("j"), kExact) == eval_left(P("z^2+3"), Q("j")) * eval_left(P("z-k"), Q("j")));
    Gen g(25);
    for (int t = 0; t < 200; ++t) {
        PR a = g.poly(3, 5, 3), b = g.poly(3, 5, 3);
        QR x = g.quat(5, 3);
        CHECK(eval_product_left(a, b, x, kExact) == eval_left(a * b, x));
        CHECK(eval_product_right(a, b, x, kExact) == eval_right(a * b, x));
    }
}

TEST_CASE("interpolation in a class") {
    Gen g(26);
    for (int t = 0; t < 100; ++t) {
        PR f = g.poly(4, 5, 3);
        QR a = g.nonreal_quat(5, 3), b = g.in_class(a), c = g.in_class(a);
        if (a == b) continue;
        QR fa = eval_left(f, a), fb = eval_left(f, b), fab = eval_left(f, a.conj());
        CHECK(interpolate_left(fa, fb, a, b, c) == eval_left(f, c));
        CHECK(interpolate_right(fa, fb, a, b, c) == eval_right(f, c));
        CHECK(interpolate_left_conj(fa, fab, a, c) == eval_left(f, c));
        CHECK(interpolate_right_conj(fa, fab, a, c) == eval_right(f, c));
    }
}

TEST_CASE("a chain product has one left zero in its class") {
    Gen g(27);
    for (int t = 0; t < 30; ++t) {
        QR a = g.nonreal_quat(3, 2);
        std::vector<QR> chain{a};
        while (chain.size() < 3) {
            QR b = g.in_class(a);
            if (b != chain.back().conj()) chain.push_back(b);
        }
        PR f = chain_product<R>(chain);
        for (int s = 0; s < 6; ++s) {
            QR x = g.in_class(a);
            CHECK(eval_left(f, x).is_exact_zero() == (x == chain.front()));
        }
    }
}

TEST_CASE("float tolerance") {
    PD f = PF("z^2+1");
    CHECK(eval_left(f, QD(0, 1, 0, 0)).is_zero(Tolerance{1e-12}));
    PD g = PF("z - 1") * PF("z + 1");
    auto d = divide_right(g, PF("z-1"), Tolerance{1e-12});
    CHECK(d.remainder.is_zero());
}
