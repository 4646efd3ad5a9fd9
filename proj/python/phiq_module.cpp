#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phi/catalog.hpp"
#include "phi/engine.hpp"
#include "phi/identify.hpp"
#include "phi/plane_graph.hpp"
#include "phi/series.hpp"
#include "phi/verify.hpp"

namespace py = pybind11;

namespace {

// Coefficients as arbitrary-size python ints, by way of their decimal form.
py::list coeffs_of(const phi::TruncatedSeries& s) {
    py::object toint = py::module_::import("builtins").attr("int");
    py::list out;
    for (int k = 0; k <= s.order(); ++k) out.append(toint(py::str(s.coeff(k).to_string())));
    return out;
}

phi::PlaneGraph resolve(const std::string& graph) {
    if (!graph.empty() && graph.front() == '{') return phi::graph_from_json(graph);
    return phi::catalog(graph);
}

}  // namespace

PYBIND11_MODULE(phiq, m) {
    m.doc() = "stable q-series of rooted plane graphs";

    m.def(
        "compute_phi",
        [](const std::string& graph, int order, int jobs) {
            return coeffs_of(phi::compute_phi(resolve(graph), order, jobs));
        },
        py::arg("graph"), py::arg("order") = 20, py::arg("jobs") = 1,
        "Series coefficients for a catalog name or a graph-json string.");

    m.def(
        "compute_phi_tqft",
        [](const std::string& graph, int order) {
            return coeffs_of(phi::compute_phi_tqft(resolve(graph), order));
        },
        py::arg("graph"), py::arg("order") = 20);

    m.def(
        "compute_phi_oracle",
        [](const std::string& graph, int order) {
            return coeffs_of(phi::compute_phi_oracle(resolve(graph), order));
        },
        py::arg("graph"), py::arg("order") = 6);

    m.def(
        "euler_infinity", [](int order) { return coeffs_of(phi::euler_infinity(order)); },
        py::arg("order"));

    m.def(
        "theta_h", [](int b, int order) { return coeffs_of(phi::theta_h(b, order)); }, py::arg("b"),
        py::arg("order"));

    m.def("catalog_names", [] { return phi::catalog_names(); });

    m.def(
        "catalog_graph_json", [](const std::string& name) { return phi::to_json(phi::catalog(name)); },
        py::arg("name"));

    m.def(
        "identify",
        [](const std::string& graph, int order, int max_factors, int b_max) {
            phi::IdentifyResult r =
                phi::identify_theta_product(phi::compute_phi(resolve(graph), order), max_factors, b_max);
            py::dict d;
            d["status"] = r.found ? "found" : "not_found";
            d["factors"] = r.factors;
            d["verified_order"] = r.verified_order;
            return d;
        },
        py::arg("graph"), py::arg("order") = 20, py::arg("max_factors") = 6, py::arg("b_max") = 14);

    m.def(
        "run_suite",
        [](const std::string& name, int order) {
            std::vector<std::pair<std::string, bool>> out;
            for (const auto& r : phi::run_suite(name, order)) out.emplace_back(r.name, r.pass);
            return out;
        },
        py::arg("name"), py::arg("order") = 0);
}
