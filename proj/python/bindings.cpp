#include "clustercat/charcat.hpp"
#include "clustercat/clusteralg.hpp"
#include "clustercat/errors.hpp"
#include "clustercat/fpoly.hpp"
#include "clustercat/io.hpp"
#include "clustercat/samples.hpp"
#include "clustercat/service.hpp"
#include "clustercat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace clustercat;
using io::Json;

namespace {

// Quiver arguments are JSON strings; the empty string means linear A4.
Quiver quiver_arg(const std::string& text) {
    return text.empty() ? samples::linear_a(4) : io::quiver_from_json(io::parse_json(text));
}

Representation rep_arg(const std::string& text) { return io::rep_from_json(io::parse_json(text)); }

}  // namespace

PYBIND11_MODULE(_clustercat, m) {
    m.doc() = "Cluster algebras, quiver Grassmannians and cluster characters (JSON-string interface)";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("laurent", [](const std::string& text) { return io::laurent_json(LaurentPoly::parse(text)).dump(); },
          py::arg("text"));
    m.def("f_polynomial", [](const std::string& rep) { return f_polynomial(rep_arg(rep)).poly.to_string(); },
          py::arg("rep"));
    m.def("grassmannian", [](const std::string& rep) { return io::grassmannian_json(rep_arg(rep)).dump(); },
          py::arg("rep"));
    m.def(
        "cc",
        [](const std::string& object, const std::string& quiver) {
            const TypeAContext ctx(quiver_arg(quiver));
            const IndecObject x = IndecObject::parse(object);
            return Json{{"object", x.id()}, {"index", object_index(ctx, x)}, {"cc", io::laurent_json(cc(ctx, x))}}.dump();
        },
        py::arg("object"), py::arg("quiver") = "");
    m.def(
        "cc_table",
        [](const std::string& quiver) {
            const TypeAContext ctx(quiver_arg(quiver));
            return io::cc_table_json(ctx, cc_table(ctx)).dump();
        },
        py::arg("quiver") = "");
    m.def(
        "ar_quiver", [](const std::string& quiver) { return io::ar_quiver_json(knit(quiver_arg(quiver))).dump(); },
        py::arg("quiver") = "");
    m.def(
        "mutate",
        [](const std::vector<int>& seq, const std::string& quiver) {
            Seed s = initial_seed(quiver_arg(quiver));
            for (int i : seq) s = mutate_seed(s, i);
            return io::seed_json(s).dump();
        },
        py::arg("seq"), py::arg("quiver") = "");
    m.def(
        "enumerate_seeds",
        [](const std::string& quiver, int max_depth) {
            const SeedEnumeration e = enumerate_seeds(quiver_arg(quiver), max_depth);
            Json vars = Json::array();
            for (const auto& u : e.variables) vars.push_back(u.to_string());
            return Json{{"seeds", e.seeds.size()}, {"depth", e.depth}, {"variables", vars}}.dump();
        },
        py::arg("quiver") = "", py::arg("max_depth") = 12);
    m.def(
        "verify",
        [](const std::string& suite, bool flip_b) {
            py::gil_scoped_release release;
            return run_verify(suite, {flip_b}).to_json().dump();
        },
        py::arg("suite") = "all", py::arg("flip_b") = false);

    py::class_<Service>(m, "Service")
        .def(py::init([](const std::string& quiver) { return std::make_unique<Service>(quiver_arg(quiver)); }),
             py::arg("quiver") = "")
        .def(
            "handle",
            [](Service& s, const std::string& method, const std::string& path, const std::string& body,
               const std::map<std::string, std::string>& query) {
                Response r;
                {
                    py::gil_scoped_release release;
                    r = s.handle(method, path, body, query);
                }
                return py::make_tuple(r.status, r.body.dump());
            },
            py::arg("method"), py::arg("path"), py::arg("body") = "", py::arg("query") = std::map<std::string, std::string>{});
}
