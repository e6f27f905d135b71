#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "quatpoly/error.hpp"
#include "quatpoly/scalar.hpp"

namespace quatpoly {

// Real quaternion x0 + x1 i + x2 j + x3 k with components in S.
template <class S>
struct Quat {
    S x0{0}, x1{0}, x2{0}, x3{0};

    Quat() = default;
    Quat(S a) : x0(std::move(a)) {}
    Quat(S a, S b, S c, S d)
        : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)), x3(std::move(d)) {}

    static Quat i() { return {S(0), S(1), S(0), S(0)}; }
    static Quat j() { return {S(0), S(0), S(1), S(0)}; }
    static Quat k() { return {S(0), S(0), S(0), S(1)}; }

    const S& real() const { return x0; }
    Quat imag() const { return {S(0), x1, x2, x3}; }
    Quat conj() const { return {x0, -x1, -x2, -x3}; }
    S norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    S trace() const { return x0 + x0; }
    double abs() const { return std::sqrt(ScalarOps<S>::to_double(norm2())); }

    bool is_exact_zero() const { return x0 == S(0) && x1 == S(0) && x2 == S(0) && x3 == S(0); }
    bool is_zero(const Tolerance& tol, double scale = 1.0) const {
        if constexpr (ScalarOps<S>::exact) return is_exact_zero();
        else return abs() <= tol.eps * scale;
    }
    bool is_real(const Tolerance& tol, double scale = 1.0) const {
        return imag().is_zero(tol, scale);
    }

    Quat inverse() const {
        S n = norm2();
        if (n == S(0)) fail(ErrorCode::ZeroDivision, "inverse of zero quaternion");
        return {x0 / n, -x1 / n, -x2 / n, -x3 / n};
    }

    Quat operator-() const { return {-x0, -x1, -x2, -x3}; }
    Quat& operator+=(const Quat& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }
    Quat& operator-=(const Quat& o) { x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; return *this; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    friend Quat operator+(Quat a, const Quat& b) { return a += b; }
    friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
                a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
                a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
                a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
    }
    friend Quat operator*(const Quat& a, const S& s) { return {a.x0 * s, a.x1 * s, a.x2 * s, a.x3 * s}; }
    friend Quat operator*(const S& s, const Quat& a) { return a * s; }
    friend Quat operator/(const Quat& a, const S& s) { return {a.x0 / s, a.x1 / s, a.x2 / s, a.x3 / s}; }
    friend bool operator==(const Quat& a, const Quat& b) = default;
};

template <class T, class S>
Quat<T> convert(const Quat<S>& q) {
    if constexpr (std::is_same_v<T, S>) return q;
    else if constexpr (std::is_same_v<T, double>)
        return {ScalarOps<S>::to_double(q.x0), ScalarOps<S>::to_double(q.x1),
                ScalarOps<S>::to_double(q.x2), ScalarOps<S>::to_double(q.x3)};
    else
        return {ScalarOps<T>::from_double(ScalarOps<S>::to_double(q.x0)),
                ScalarOps<T>::from_double(ScalarOps<S>::to_double(q.x1)),
                ScalarOps<T>::from_double(ScalarOps<S>::to_double(q.x2)),
                ScalarOps<T>::from_double(ScalarOps<S>::to_double(q.x3))};
}

template <class S>
bool approx_equal(const Quat<S>& a, const Quat<S>& b, const Tolerance& tol, double scale = 1.0) {
    return (a - b).is_zero(tol, scale);
}

// a^{-1} b a
template <class S>
Quat<S> conjugate_by(const Quat<S>& a, const Quat<S>& b) {
    return a.inverse() * b * a;
}

// Similarity class [a] = { h^{-1} a h }, determined by (trace, norm2).
template <class S>
struct ConjugacyClass {
    S trace{0};
    S norm2{0};
    bool is_real = false;

    // norm2 - trace^2/4, the squared length of the imaginary part.
    S imag_norm2() const { return norm2 - trace * trace / S(4); }
};

template <class S>
ConjugacyClass<S> make_class(S trace, S norm2, const Tolerance& tol = {}) {
    ConjugacyClass<S> v{trace, norm2, false};
    S d = v.imag_norm2();
    double scale = 1.0 + ScalarOps<S>::abs_d(norm2);
    v.is_real = ScalarOps<S>::is_zero(d, tol, scale);
    if (!v.is_real && d < S(0)) fail(ErrorCode::PreconditionViolated, "trace^2 > 4 norm2: not a class");
    return v;
}

template <class S>
ConjugacyClass<S> class_of(const Quat<S>& q, const Tolerance& tol = {}) {
    ConjugacyClass<S> v{q.trace(), q.norm2(), false};
    v.is_real = q.is_real(tol, 1.0 + q.abs());
    return v;
}

template <class S>
bool same_class(const ConjugacyClass<S>& a, const ConjugacyClass<S>& b, const Tolerance& tol = {}) {
    double scale = 1.0 + ScalarOps<S>::abs_d(a.norm2) + ScalarOps<S>::abs_d(a.trace);
    return ScalarOps<S>::is_zero(a.trace - b.trace, tol, scale) &&
           ScalarOps<S>::is_zero(a.norm2 - b.norm2, tol, scale);
}

template <class S>
bool in_class(const ConjugacyClass<S>& v, const Quat<S>& q, const Tolerance& tol = {}) {
    return same_class(v, class_of(q, tol), tol);
}

// Strict weak order by (trace, norm2).
template <class S>
bool class_less(const ConjugacyClass<S>& a, const ConjugacyClass<S>& b) {
    if (a.trace != b.trace) return a.trace < b.trace;
    return a.norm2 < b.norm2;
}

// trace/2 + sqrt(norm2 - trace^2/4) i. Exact backend throws
// IrrationalRepresentative if the square root is not rational.
template <class S>
Quat<S> class_representative(const ConjugacyClass<S>& v) {
    S d = v.imag_norm2();
    if (v.is_real) return Quat<S>(v.trace / S(2));
    auto m = ScalarOps<S>::sqrt(d);
    if (!m) {
        if constexpr (ScalarOps<S>::exact)
            fail(ErrorCode::IrrationalRepresentative, "class has no rational complex representative");
        else
            fail(ErrorCode::PreconditionViolated, "not a class");
    }
    return {v.trace / S(2), *m, S(0), S(0)};
}

// Some point of V with components in S. Falls back to a sum of three
// rational squares when the complex representative is irrational.
template <class S>
Quat<S> class_point(const ConjugacyClass<S>& v);

// Nonreal chain with gamma_{j+1} != conj(gamma_j), all in one class.
template <class S>
bool validate_spherical_chain(std::span<const Quat<S>> chain, const Tolerance& tol = {});

// Integer solution of a^2+b^2+c^2 = n, if one is found.
std::optional<std::array<mpz_class, 3>> three_squares(const mpz_class& n);

} // namespace quatpoly
