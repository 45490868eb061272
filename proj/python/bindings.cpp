#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtrin/bosonic.hpp"
#include "qtrin/qcomb.hpp"
#include "qtrin/verify.hpp"

namespace py = pybind11;
using namespace qtrin;

namespace {

py::object to_pyint(const Integer& v) { return py::module_::import("builtins").attr("int")(v.to_string()); }

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(r.numerator()), to_pyint(r.denominator()));
}

py::list terms(const QPoly& p) {
    py::list out;
    for (const auto& t : p.terms()) out.append(py::make_tuple(to_fraction(t.exponent), to_pyint(t.coeff)));
    return out;
}

Rational order_arg(std::int64_t o) { return Rational(o); }

}  // namespace

PYBIND11_MODULE(_qtrin, m) {
    m.doc() = "Exact q-series toolkit for refined q-trinomial identities";

    py::register_exception<Error>(m, "Error");

    py::class_<QPoly>(m, "QPoly")
        .def(py::init<>())
        .def("terms", &terms, "List of (Fraction exponent, int coefficient), ascending")
        .def("is_zero", &QPoly::is_zero)
        .def("eval_at_one", [](const QPoly& p) { return to_pyint(p.eval_at_one()); })
        .def("substituted_qinv", &QPoly::substituted_qinv)
        .def("shifted", [](const QPoly& p, std::int64_t num, std::int64_t den) { return p.shifted(Rational(num, den)); },
             py::arg("num"), py::arg("den") = 1)
        .def("__add__", [](const QPoly& a, const QPoly& b) { return a + b; })
        .def("__sub__", [](const QPoly& a, const QPoly& b) { return a - b; })
        .def("__mul__", [](const QPoly& a, const QPoly& b) { return a * b; })
        .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
        .def("__len__", &QPoly::size)
        .def("__str__", &QPoly::to_string)
        .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.to_string() + ")"; });

    py::class_<QSeries>(m, "QSeries")
        .def_property_readonly("poly", &QSeries::poly)
        .def_property_readonly("order", [](const QSeries& s) { return to_fraction(s.order()); })
        .def("terms", [](const QSeries& s) { return terms(s.poly()); })
        .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
        .def("__str__", &QSeries::to_string)
        .def("__repr__", [](const QSeries& s) { return "QSeries(" + s.to_string() + ")"; });

    m.def("qbinomial", &qbinomial, py::arg("n"), py::arg("a"));
    m.def("qtrinomial2", &qtrinomial2, py::arg("L"), py::arg("a"));
    m.def("qtrinomial_T", [](std::int64_t L, std::int64_t a) { return qtrinomial_T(L, a, CrossCheck::kOn); },
          py::arg("L"), py::arg("a"));
    m.def("refined_T", py::overload_cast<std::int64_t, std::int64_t, std::int64_t, std::int64_t>(&refined_T),
          py::arg("L"), py::arg("M"), py::arg("a"), py::arg("b"));
    m.def("refined_T_dual_check", [](std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b) {
        return refined_T_dual_check({L, M, a, b});
    });
    m.def("theorem1_check", &theorem1_check, py::arg("L"), py::arg("M"), py::arg("a"), py::arg("b"));

    m.def(
        "solve_mn",
        [](const std::string& alg, std::int64_t N, int vertex) {
            std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
            for (auto& s : solve_mn({&algebra(alg), N, vertex})) out.emplace_back(s.m, s.n);
            return out;
        },
        py::arg("algebra"), py::arg("N"), py::arg("vertex"), "List of (m, n) pairs, lexicographic in n");

    m.def(
        "f_poly",
        [](const std::string& alg, std::int64_t M, int sigma) { return f_poly({parse_algebra_name(alg), M, sigma}); },
        py::arg("algebra"), py::arg("M"), py::arg("sigma"));
    m.def("conj_lhs", [](int w, std::int64_t L, std::int64_t M) { return conj_lhs(w, L, M); });
    m.def("conj_rhs", &conj_rhs);
    m.def("kseries_lhs", [](const std::string& fam, std::int64_t k, std::int64_t L, std::int64_t M) {
        return kseries_lhs({parse_kfamily(fam), k, L, M});
    });
    m.def("kseries_rhs", [](const std::string& fam, std::int64_t k, std::int64_t L, std::int64_t M) {
        return kseries_rhs({parse_kfamily(fam), k, L, M});
    });

    m.def(
        "fermionic_char_sum",
        [](const std::string& fam, int sigma, std::int64_t order) {
            return fermionic_char_sum(parse_char_family(fam), sigma, order_arg(order));
        },
        py::arg("family"), py::arg("sigma") = 0, py::arg("order") = 12);
    m.def(
        "virasoro_char",
        [](std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s, std::int64_t order) {
            return virasoro_char({p, pp, r, s}, order_arg(order));
        },
        py::arg("p"), py::arg("pp"), py::arg("r"), py::arg("s"), py::arg("order") = 12);
    m.def(
        "branching_function",
        [](std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s, int sigma, std::int64_t order) {
            return branching_function({p, pp, r, s, sigma}, order_arg(order));
        },
        py::arg("p"), py::arg("pp"), py::arg("r"), py::arg("s"), py::arg("sigma"), py::arg("order") = 12);
    m.def(
        "string_function", [](int sigma, std::int64_t order) { return string_function(sigma, order_arg(order)); },
        py::arg("sigma"), py::arg("order") = 12);

    m.def("identity_names", [] {
        std::vector<std::string> out;
        for (const auto& d : identity_registry()) out.push_back(d.name);
        return out;
    });
    m.def(
        "verify_identity",
        [](const std::string& name, std::optional<std::string> grid, std::optional<std::int64_t> order) {
            VerifyOptions o;
            if (grid) o.grid = Grid::parse(*grid);
            o.order = order;
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = verify_identity(name, o);
            }
            return py::module_::import("json").attr("loads")(r.to_json());
        },
        py::arg("name"), py::arg("grid") = py::none(), py::arg("order") = py::none(),
        "Runs one identity and returns its report as a dict");
}
