#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wlp/circlemaps.hpp"
#include "wlp/compops.hpp"
#include "wlp/error.hpp"
#include "wlp/groupalg.hpp"
#include "wlp/json_io.hpp"
#include "wlp/seqalg.hpp"
#include "wlp/verify.hpp"
#include "wlp/version.hpp"
#include "wlp/weights.hpp"

namespace py = pybind11;
using namespace wlp;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list l;
        for (const auto& v : j) l.append(to_py(v));
        return std::move(l);
    }
    default: {
        py::dict d;
        for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
        return std::move(d);
    }
    }
}

std::vector<cplx> values_of(const TruncSeq& f) { return {f.values().begin(), f.values().end()}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted convolution algebras on Z and on finite groups";
    m.attr("__version__") = kVersion;

    static py::exception<Error> base(m, "WlpError", PyExc_RuntimeError);
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<AccuracyError>(m, "AccuracyError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<InvalidCharacterError>(m, "InvalidCharacterError", base.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
    py::register_exception<InvertibilityError>(m, "InvertibilityError", base.ptr());

    py::class_<Weight>(m, "Weight")
        .def_static("constant", [] { return Weight::constant(); })
        .def_static("polynomial", &Weight::polynomial, py::arg("a"))
        .def_static("subexp", &Weight::subexp, py::arg("gamma"))
        .def_static("exppoly", &Weight::exppoly, py::arg("a"))
        .def_static("tabulated", py::overload_cast<std::int64_t, std::vector<double>>(&Weight::tabulated),
                    py::arg("lo"), py::arg("values"))
        .def_static("from_json", [](const std::string& s) { return weight_from_json(json::parse(s)); })
        .def("to_json", [](const Weight& w) { return weight_to_json(w).dump(); })
        .def_property_readonly("family", [](const Weight& w) { return to_string(w.family()); })
        .def_property_readonly("parameter", &Weight::parameter)
        .def("__call__", [](const Weight& w, std::int64_t n) { return w(n); })
        .def("__repr__", [](const Weight& w) { return "Weight(" + weight_to_json(w).dump() + ")"; });

    m.def("check_submultiplicative",
          [](const Weight& w, std::int64_t window) { return to_py(to_json(check_submultiplicative(w, window))); },
          py::arg("w"), py::arg("window"));
    m.def("algebra_constant",
          [](const Weight& w, double p, std::int64_t window) { return to_py(to_json(algebra_constant(w, p, window))); },
          py::arg("w"), py::arg("p"), py::arg("window"));

    py::class_<TruncSeq>(m, "TruncSeq")
        .def(py::init([](std::int64_t lo, std::vector<cplx> values) { return TruncSeq(lo, std::move(values)); }),
             py::arg("lo"), py::arg("values"))
        .def_property_readonly("lo", &TruncSeq::lo)
        .def_property_readonly("hi", &TruncSeq::hi)
        .def_property_readonly("values", &values_of)
        .def("is_zero", &TruncSeq::is_zero)
        .def("__getitem__", [](const TruncSeq& f, std::int64_t n) { return f[n]; })
        .def("__len__", &TruncSeq::size)
        .def("__eq__", [](const TruncSeq& a, const TruncSeq& b) { return a == b; })
        .def("__repr__", [](const TruncSeq& f) { return "TruncSeq(" + truncseq_to_json(f).dump() + ")"; });

    m.def("delta", &delta, py::arg("n"));
    m.def("convolve", &convolve, py::arg("f"), py::arg("g"));
    m.def("convolve_direct", &convolve_direct, py::arg("f"), py::arg("g"));
    m.def("norm_p_w", &norm_p_w, py::arg("f"), py::arg("p"), py::arg("w"));
    m.def("translate", &translate, py::arg("f"), py::arg("x"));
    m.def("formal_derivative", &formal_derivative, py::arg("f"));
    m.def("antiderivative", &antiderivative, py::arg("g"));
    m.def("gelfand_sample", &gelfand_sample, py::arg("f"), py::arg("M"));

    py::class_<CircleMap>(m, "CircleMap")
        .def_static("monomial", &CircleMap::monomial, py::arg("lam"), py::arg("m"))
        .def_static("blaschke", &CircleMap::blaschke, py::arg("r"))
        .def("__call__", [](const CircleMap& phi, cplx z) { return eval_map(phi, z); })
        .def("inverse", &CircleMap::inverse)
        .def("__repr__", &CircleMap::describe);

    m.def("coeffs", &coeffs, py::arg("phi"), py::arg("tol") = 1e-12);
    m.def("power_coeffs", &power_coeffs, py::arg("phi"), py::arg("n"), py::arg("tol") = 1e-12);
    m.def("compose_transform",
          [](const TruncSeq& f, const CircleMap& phi) { return compose_transform(f, phi); }, py::arg("f"),
          py::arg("phi"));
    m.def("column_ratio", &column_ratio, py::arg("phi"), py::arg("w"), py::arg("p"), py::arg("n"));
    m.def("op_norm_l2", [](const CircleMap& phi, const Weight& w, std::int64_t N) { return op_norm_l2(phi, w, N); },
          py::arg("phi"), py::arg("w"), py::arg("N"));
    m.def("k_bound", &k_bound, py::arg("r"), py::arg("w"), py::arg("Lambda") = 1.0);
    m.def("standard_automorphism", &standard_automorphism, py::arg("f"), py::arg("lam"), py::arg("reflect"));

    m.def(
        "blowup_experiment",
        [](int weight_case, double r, double p, std::vector<std::int64_t> n, double gamma, double a, unsigned jobs) {
            BlowupParams params;
            params.weight_case = weight_case;
            params.r = r;
            params.p = p;
            params.n_list = std::move(n);
            params.gamma = gamma;
            params.a = a;
            py::list out;
            for (const auto& row : blowup_experiment(params, jobs)) out.append(to_py(to_json(row)));
            return out;
        },
        py::arg("case"), py::arg("r"), py::arg("p"), py::arg("n"), py::arg("gamma") = 0.5, py::arg("a") = 2.0,
        py::arg("jobs") = 1);
    m.def(
        "distortion_experiment",
        [](double a, std::vector<double> r, std::int64_t N, double Lambda, unsigned jobs) {
            py::list out;
            for (const auto& rep : distortion_experiment(Weight::polynomial(a), r, N, Lambda, jobs))
                out.append(to_py(to_json(rep)));
            return out;
        },
        py::arg("a"), py::arg("r"), py::arg("N"), py::arg("Lambda") = 1.0, py::arg("jobs") = 1);
    m.def(
        "chain_rule_check",
        [](const TruncSeq& f, const CircleMap& phi, double tol) { return to_py(to_json(chain_rule_check(f, phi, tol))); },
        py::arg("f"), py::arg("phi"), py::arg("tol") = 1e-14);

    m.def(
        "enumerate_automorphisms_l2",
        [](std::size_t n, unsigned jobs) { return to_py(to_json(enumerate_automorphisms_l2(n, jobs))); }, py::arg("n"),
        py::arg("jobs") = 1);
    m.def(
        "kalton_wood_scan", [](std::size_t n, unsigned jobs) { return to_py(to_json(kalton_wood_scan(n, jobs))); },
        py::arg("n"), py::arg("jobs") = 1);
    m.def(
        "shift_homomorphism_check",
        [](const std::string& group) {
            const auto G = builtin_group(group);
            return shift_homomorphism_check(*G, Weight::constant(), 1.0).unique_solution;
        },
        py::arg("group"));

    m.def(
        "run_verify",
        [](const std::string& suite, std::uint64_t seed, unsigned jobs) {
            py::list out;
            for (const auto& r : run_verify(suite, seed, jobs)) {
                py::dict d;
                d["suite"] = r.suite;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = 0, py::arg("jobs") = 1);
}
