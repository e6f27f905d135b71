#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatpoly/api.hpp"

namespace py = pybind11;
using namespace quatpoly;

namespace {

RunConfig make_config(const std::string& backend, const std::string& side, double eps, std::size_t order) {
    RunConfig c;
    if (backend == "exact")
        c.backend = Backend::Exact;
    else if (backend == "float64")
        c.backend = Backend::Float;
    else
        throw py::value_error("backend must be 'exact' or 'float64'");
    if (side == "left")
        c.side = Side::Left;
    else if (side == "right")
        c.side = Side::Right;
    else
        throw py::value_error("side must be 'left' or 'right'");
    c.eps = eps;
    c.order = order;
    return c;
}

// Results cross the boundary as JSON text; library errors as the JSON error object.
template <class F>
std::string run(F&& f) {
    Json out;
    try {
        out = f();
    } catch (const py::error_already_set&) {
        throw;
    } catch (const std::exception& e) {
        throw py::value_error("quatpoly:" + error_json(e).dump());
    }
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_quatpoly, m) {
    m.doc() = "Quaternion polynomial zeros, factorizations and least common multiples";

#define QP_CFG py::arg("backend") = "exact", py::arg("side") = "left", py::arg("eps") = 1e-10, py::arg("order") = 30

    m.def("eval", [](const std::string& poly, const std::string& point, const std::string& b, const std::string& s,
                     double eps, std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_eval(c, poly, point); });
    }, py::arg("poly"), py::arg("point"), QP_CFG);

    m.def("roots", [](const std::string& poly, const std::string& b, const std::string& s, double eps, std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_roots(c, poly); });
    }, py::arg("poly"), QP_CFG);

    m.def("factor", [](const std::string& poly, const std::string& b, const std::string& s, double eps, std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_factor(c, poly); });
    }, py::arg("poly"), QP_CFG);

    m.def("divisors", [](const std::string& poly, std::optional<std::string> point, const std::string& b,
                         const std::string& s, double eps, std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_divisors(c, poly, point); });
    }, py::arg("poly"), py::arg("point") = py::none(), QP_CFG);

    m.def("mult", [](const std::string& poly, const std::string& point, const std::string& b, const std::string& s,
                     double eps, std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_mult(c, poly, point); });
    }, py::arg("poly"), py::arg("point"), QP_CFG);

    m.def("lcm", [](const std::vector<std::string>& polys, const std::string& b, const std::string& s, double eps,
                    std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_lcm(c, polys); });
    }, py::arg("polys"), QP_CFG);

    m.def("decompose", [](const std::string& poly, const std::string& b, const std::string& s, double eps,
                          std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_decompose(c, poly); });
    }, py::arg("poly"), QP_CFG);

    m.def("blaschke", [](const std::string& roots, const std::string& b, const std::string& s, double eps,
                         std::size_t order) {
        auto c = make_config(b, s, eps, order);
        return run([&] { return api_blaschke(c, roots); });
    }, py::arg("roots"), QP_CFG);

    m.def("golden", [] { return run([] { return api_golden(RunConfig{}); }); });

#undef QP_CFG
}
