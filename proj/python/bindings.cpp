#include "quatrefine/catalogue.hpp"
#include "quatrefine/cmorders.hpp"
#include "quatrefine/primecase.hpp"
#include "quatrefine/quadclass.hpp"
#include "quatrefine/ssab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace quatrefine;

namespace {

Int to_int(long long v) { return Int(std::to_string(v)); }

}  // namespace

PYBIND11_MODULE(_quatrefine, m) {
    m.doc() = "Refined class and type numbers over real quadratic fields";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def(
        "refined_json", [](long long d, const std::string& tag) { return counts_json(full_counts(to_int(d), parse_alg_tag(tag))); },
        py::arg("d"), py::arg("tag") = "Hinf");
    m.def("prime_json", [](long long p) { return counts_json(counts_prime(to_int(p))); }, py::arg("p"));
    m.def("crosscheck_prime", [](long long p) { return crosscheck_prime(to_int(p)); }, py::arg("p"));
    m.def("census_json", [](long long p) { return census_json(census(to_int(p))); }, py::arg("p"));
    m.def("zeta", [](long long d) { return to_string(zeta_minus_one(to_int(d))); }, py::arg("d"));
    m.def("class_number", [](long long n) { return class_number_field(to_int(n)).get_str(); }, py::arg("m"));
    m.def(
        "cmorders_json",
        [](long long d) {
            auto fu = fundamental_unit(to_int(d));
            return cmorders_json(fu, enumerate_B(fu));
        },
        py::arg("d"));
    m.def(
        "order_verify_json", [](const std::string& id, long long d) { return catalogue_json(verify_case(id, to_int(d))); },
        py::arg("case"), py::arg("d"));
}
