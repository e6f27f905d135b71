#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "quatpoly/rational.hpp"

namespace quatpoly {

// Absolute/relative zero test for the floating backend. The exact backend
// ignores it.
struct Tolerance {
    double eps = 1e-10;
};

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";

    static double to_double(const Rational& x) { return x.to_double(); }
    static double abs_d(const Rational& x) { return std::fabs(x.to_double()); }
    static bool is_zero(const Rational& x, const Tolerance&, double = 1.0) { return x.is_zero(); }
    static std::optional<Rational> sqrt(const Rational& x);
    static Rational from_double(double d) { return Rational::from_double(d); }
    static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float64";

    static double to_double(double x) { return x; }
    static double abs_d(double x) { return std::fabs(x); }
    static bool is_zero(double x, const Tolerance& tol, double scale = 1.0) {
        return std::fabs(x) <= tol.eps * scale;
    }
    static std::optional<double> sqrt(double x) {
        if (x < 0) return std::nullopt;
        return std::sqrt(x);
    }
    static double from_double(double d) { return d; }
    // Shortest text that round-trips.
    static std::string to_string(double x);
};

} // namespace quatpoly
