#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "quatpoly/api.hpp"

using namespace quatpoly;

int main(int argc, char** argv) {
    CLI::App app{"Quaternion polynomial toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* e = std::getenv("QUATPOLY_EPS")) {
        try {
            cfg.eps = std::stod(e);
        } catch (const std::exception&) {
            std::cerr << "QUATPOLY_EPS is not a number: " << e << "\n";
            return 2;
        }
    }
    std::string backend = "exact", side = "left";
    app.add_option("--backend", backend, "exact or float64")
        ->check(CLI::IsMember({"exact", "float64"}))
        ->capture_default_str();
    app.add_option("--eps", cfg.eps, "Zero tolerance for the float64 backend")->capture_default_str();
    app.add_option("--order", cfg.order, "Truncation order for series")->capture_default_str();
    app.add_flag("--json", cfg.json, "Print JSON");
    app.add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}))->capture_default_str();
    app.add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();

    std::string poly, point, roots;
    std::vector<std::string> polys;
    std::optional<std::string> cls;

    auto* eval = app.add_subcommand("eval", "Evaluate at a quaternion (--side)");
    eval->add_option("poly", poly)->required();
    eval->add_option("point", point)->required();
    auto* rts = app.add_subcommand("roots", "All zeros grouped by conjugacy class");
    rts->add_option("poly", poly)->required();
    auto* fac = app.add_subcommand("factor", "Factorization into linear factors");
    fac->add_option("poly", poly)->required();
    auto* div = app.add_subcommand("divisors", "Spherical divisors per class");
    div->add_option("poly", poly)->required();
    div->add_option("--class", cls, "Any point of the class");
    auto* mul = app.add_subcommand("mult", "Left, right and spherical multiplicity at a point");
    mul->add_option("poly", poly)->required();
    mul->add_option("point", point)->required();
    auto* lcm = app.add_subcommand("lcm", "Least common multiple (--side=left: right multiple)");
    lcm->add_option("polys", polys)->required();
    auto* dec = app.add_subcommand("decompose", "Indecomposable decomposition (--side)");
    dec->add_option("poly", poly)->required();
    auto* bla = app.add_subcommand("blaschke", "Blaschke completion of a root list");
    bla->add_option("roots", roots)->required();
    auto* gold = app.add_subcommand("golden", "Run the built-in worked examples");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.backend = backend == "exact" ? Backend::Exact : Backend::Float;
    cfg.side = side == "left" ? Side::Left : Side::Right;

    Json out;
    try {
        if (eval->parsed()) out = api_eval(cfg, poly, point);
        else if (rts->parsed()) out = api_roots(cfg, poly);
        else if (fac->parsed()) out = api_factor(cfg, poly);
        else if (div->parsed()) out = api_divisors(cfg, poly, cls);
        else if (mul->parsed()) out = api_mult(cfg, poly, point);
        else if (lcm->parsed()) out = api_lcm(cfg, polys);
        else if (dec->parsed()) out = api_decompose(cfg, poly);
        else if (bla->parsed()) out = api_blaschke(cfg, roots);
        else if (gold->parsed()) out = api_golden(cfg);
    } catch (const Error& e) {
        std::cerr << error_json(e).dump() << "\n";
        return e.code() == ErrorCode::Usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << error_json(e).dump() << "\n";
        return 1;
    }

    if (cfg.json) std::cout << out.dump(2) << "\n";
    else std::cout << render_text(out);
    if (gold->parsed() && !out["passed"].get<bool>()) return 1;
    return 0;
}
