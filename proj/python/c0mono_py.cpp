#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "c0mono/certify.hpp"
#include "c0mono/gossez.hpp"
#include "c0mono/seqspace.hpp"
#include "c0mono/suite.hpp"

namespace py = pybind11;
using namespace c0mono;

namespace {

// Rationals cross the boundary as fractions.Fraction (int and "p/q" str are accepted on input).
Rational to_rational(const py::handle& value) {
    if (py::isinstance<py::str>(value)) {
        return Rational::parse(value.cast<std::string>());
    }
    if (py::isinstance<py::bool_>(value)) {
        throw py::type_error("bool is not a rational");
    }
    if (py::isinstance<py::int_>(value)) {
        return Rational::parse(py::str(value).cast<std::string>());
    }
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator") && !py::isinstance<py::float_>(value)) {
        const auto num = py::str(value.attr("numerator")).cast<std::string>();
        const auto den = py::str(value.attr("denominator")).cast<std::string>();
        return Rational::parse(num + "/" + den);
    }
    throw py::type_error("expected int, str or fractions.Fraction");
}

py::object to_fraction(const Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(value.str()));
}

std::vector<Rational> to_rationals(const py::iterable& values) {
    std::vector<Rational> out;
    for (const auto& v : values) {
        out.push_back(to_rational(v));
    }
    return out;
}

py::list fractions(std::span<const Rational> values) {
    py::list out;
    for (const auto& v : values) {
        out.append(to_fraction(v));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_c0mono, m) {
    m.doc() = "Exact certificates for the skew linear maximal monotone operator T on c0";

    py::register_exception<NonSummable>(m, "NonSummable", PyExc_ArithmeticError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<EmptySample>(m, "EmptySample", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CertificateFailure>(m, "CertificateFailure", PyExc_AssertionError);

    py::class_<EvConstSeq>(m, "Sequence", "Eventually-constant rational sequence, indexed from 1")
        .def(py::init([](const py::iterable& prefix, const py::object& tail) {
                 return EvConstSeq(to_rationals(prefix), to_rational(tail));
             }),
             py::arg("prefix") = py::list(), py::arg("tail") = 0)
        .def_static("unit", &EvConstSeq::unit, py::arg("k"))
        .def_static("constant", [](const py::object& c) { return EvConstSeq::constant(to_rational(c)); })
        .def_property_readonly("prefix", [](const EvConstSeq& s) { return fractions(s.prefix()); })
        .def_property_readonly("tail", [](const EvConstSeq& s) { return to_fraction(s.tail()); })
        .def("finitely_supported", &EvConstSeq::finitely_supported)
        .def("__getitem__", [](const EvConstSeq& s, std::size_t i) {
            if (i == 0) {
                throw py::index_error("sequence indices start at 1");
            }
            return to_fraction(s[i]);
        })
        .def("__eq__", [](const EvConstSeq& a, const EvConstSeq& b) { return a == b; })
        .def("__add__", [](const EvConstSeq& a, const EvConstSeq& b) { return a + b; })
        .def("__sub__", [](const EvConstSeq& a, const EvConstSeq& b) { return a - b; })
        .def("__neg__", [](const EvConstSeq& a) { return -a; })
        .def("__rmul__", [](const EvConstSeq& a, const py::object& c) { return scale(to_rational(c), a); })
        .def("__mul__", [](const EvConstSeq& a, const py::object& c) { return scale(to_rational(c), a); })
        .def("__repr__", [](const EvConstSeq& s) { return "Sequence" + to_string(s); })
        .def("to_dict", [](const EvConstSeq& s) {
            py::list prefix;
            for (const auto& v : s.prefix()) {
                prefix.append(v.str());
            }
            py::dict d;
            d["prefix"] = prefix;
            d["tail"] = s.tail().str();
            return d;
        });

    m.def("pairing", [](const EvConstSeq& x, const EvConstSeq& y) { return to_fraction(pairing(x, y)); });
    m.def("sup_norm", [](const EvConstSeq& a) { return to_fraction(sup_norm(a)); });
    m.def("l1_norm", [](const EvConstSeq& a) { return to_fraction(l1_norm(a)); });
    m.def("total_sum", [](const EvConstSeq& a) { return to_fraction(total_sum(a)); });

    m.def("gossez_apply", &gossez_apply, py::arg("y"));
    m.def("t_solve", &t_solve, py::arg("x"), "The y with -G(y) = x, or None when x is outside dom(T)");
    m.def("unit_u", &unit_u, py::arg("m"));
    m.def("unit_v", &unit_v, py::arg("m"));
    m.def("range_member", &range_member, py::arg("y"));

    py::class_<GraphPoint>(m, "GraphPoint")
        .def(py::init<>())
        .def_static("from_y", &GraphPoint::from_y, py::arg("y"))
        .def_property_readonly("x", &GraphPoint::x)
        .def_property_readonly("y", &GraphPoint::y)
        .def("__eq__", [](const GraphPoint& a, const GraphPoint& b) { return a == b; });

    py::class_<ExtensionPoint>(m, "ExtensionPoint")
        .def_property_readonly("tau", [](const ExtensionPoint& e) { return to_fraction(e.tau()); })
        .def_property_readonly("ytilde", &ExtensionPoint::ytilde)
        .def_property_readonly("xstar", &ExtensionPoint::xstar)
        .def_property_readonly("xstarstar", &ExtensionPoint::xstarstar);

    py::class_<Violation>(m, "Violation")
        .def_readonly("witness", &Violation::witness)
        .def_property_readonly("product", [](const Violation& v) { return to_fraction(v.product); })
        .def_property_readonly("kind",
                               [](const Violation& v) {
                                   return v.kind == Violation::Kind::recurrence_break ? "recurrence_break"
                                                                                      : "nonzero_sum";
                               })
        .def_readonly("index", &Violation::index);

    py::class_<GraphSampler>(m, "GraphSampler")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("sequence", &GraphSampler::sequence, py::arg("support_max"), py::arg("coeff_bound"))
        .def("graph_point", &GraphSampler::graph_point, py::arg("support_max"), py::arg("coeff_bound"));

    m.def("monotone_product",
          [](const GraphPoint& p, const GraphPoint& q) { return to_fraction(monotone_product(p, q)); });
    m.def(
        "extension_point",
        [](const py::object& tau, const EvConstSeq& ytilde) { return extension_point(to_rational(tau), ytilde); },
        py::arg("tau"), py::arg("ytilde"));
    m.def("closure_margin",
          [](const ExtensionPoint& ep, const GraphPoint& p) { return to_fraction(closure_margin(ep, p)); });
    m.def(
        "distinctness",
        [](const py::object& t1, const py::object& t2, const EvConstSeq& ytilde) {
            return to_fraction(distinctness(to_rational(t1), to_rational(t2), ytilde));
        },
        py::arg("tau1"), py::arg("tau2"), py::arg("ytilde"));
    m.def("fitzpatrick_value",
          [](const ExtensionPoint& ep, const GraphPoint& p) { return to_fraction(fitzpatrick_value(ep, p)); });
    m.def("fitzpatrick_gap", [](const ExtensionPoint& ep, const std::vector<GraphPoint>& sample) {
        return to_fraction(fitzpatrick_gap(ep, sample));
    });
    m.def(
        "violation_witness",
        [](const EvConstSeq& x, const EvConstSeq& y) -> py::object {
            WitnessVerdict v = violation_witness(x, y);
            if (std::holds_alternative<Member>(v)) {
                return py::none();
            }
            return py::cast(std::get<Violation>(std::move(v)));
        },
        py::arg("x"), py::arg("y"), "None when (x, y) is in graph(T), otherwise a Violation");

    m.def(
        "run_suite",
        [](const std::string& config_json, const std::string& format, bool timestamp) {
            const SuiteConfig config = config_json.empty() ? SuiteConfig::defaults() : parse_config(config_json);
            SuiteReport report;
            {
                py::gil_scoped_release release;
                report = run_suite(config);
            }
            const RenderOptions options{format == "markdown" ? ReportFormat::markdown : ReportFormat::json,
                                        timestamp};
            return py::make_tuple(report.passed(), render_report(report, options));
        },
        py::arg("config_json") = "", py::arg("format") = "json", py::arg("timestamp") = false,
        "Runs the certificate suites; returns (passed, rendered report)");
}
