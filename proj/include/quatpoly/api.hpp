#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quatpoly/polynomial.hpp"

namespace quatpoly {

enum class Backend { Exact, Float };

struct RunConfig {
    Backend backend = Backend::Exact;
    double eps = 1e-10;
    std::size_t order = 30;
    bool json = false;
    Side side = Side::Left;
    std::uint64_t seed = 0;

    // eps is forced to 0 on the exact backend.
    Tolerance tolerance() const { return Tolerance{backend == Backend::Exact ? 0.0 : eps}; }
};

using Json = nlohmann::json;

Json api_eval(const RunConfig& cfg, const std::string& poly, const std::string& point);
Json api_roots(const RunConfig& cfg, const std::string& poly);
Json api_factor(const RunConfig& cfg, const std::string& poly);
// All classes, or only the class of `point` when given.
Json api_divisors(const RunConfig& cfg, const std::string& poly, const std::optional<std::string>& point);
Json api_mult(const RunConfig& cfg, const std::string& poly, const std::string& point);
// Side::Left: least right common multiple; Side::Right: least left common multiple.
Json api_lcm(const RunConfig& cfg, const std::vector<std::string>& polys);
Json api_decompose(const RunConfig& cfg, const std::string& poly);
Json api_blaschke(const RunConfig& cfg, const std::string& roots);
// Built-in worked examples on the exact backend; "passed" is true when all match.
Json api_golden(const RunConfig& cfg);

// Plain-text rendering of an api result.
std::string render_text(const Json& j);

// Structured description of a library error.
Json error_json(const std::exception& e);

} // namespace quatpoly
