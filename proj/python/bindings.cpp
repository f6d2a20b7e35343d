#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotups/knot_expr.hpp"
#include "knotups/staircase.hpp"
#include "knotups/upsilon.hpp"
#include "knotups/verify.hpp"

namespace py = pybind11;
using namespace knotups;

namespace {

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object as_int = py::module_::import("builtins").attr("int");
    return fraction(as_int(r.num().str()), as_int(r.den().str()));
}

py::object to_py(const ExtRational& r) {
    if (r.is_pos_inf()) return py::float_(HUGE_VAL);
    if (r.is_neg_inf()) return py::float_(-HUGE_VAL);
    return to_py(r.value());
}

// Accepts int, Fraction or "a/b".
Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

BifilteredComplex realize_text(const std::string& text, std::size_t limit) { return realize(*parse_expr(text), limit); }

}  // namespace

PYBIND11_MODULE(_knotups, m) {
    m.doc() = "Upsilon and secondary Upsilon of torus knots, their connected sums and mirrors";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::out_of_range& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.attr("DEFAULT_GENERATOR_LIMIT") = kDefaultGeneratorLimit;

    m.def("normalize", [](const std::string& text) { return to_string(*parse_expr(text)); }, py::arg("expr"),
          "Parse a knot expression and print it in canonical form.");

    m.def("generator_count", [](const std::string& text) { return realized_size(*parse_expr(text)); },
          py::arg("expr"));

    m.def(
        "alexander",
        [](std::int64_t p, std::int64_t q) {
            std::map<int, std::int64_t> terms = alexander_torus(p, q).terms();
            return terms;
        },
        py::arg("p"), py::arg("q"), "Alexander polynomial of T(p,q) as {exponent: coefficient}.");

    m.def(
        "upsilon",
        [](const std::string& text, std::size_t limit) {
            py::list out;
            PLFunction f = upsilon_pl(realize_text(text, limit));
            for (const auto& b : f.breakpoints()) {
                out.append(py::make_tuple(to_py(b.t), to_py(b.value)));
            }
            return out;
        },
        py::arg("expr"), py::arg("max_generators") = kDefaultGeneratorLimit,
        "Breakpoints (t, value) of Upsilon on [0, 2].");

    m.def(
        "upsilon2",
        [](const std::string& text, const py::object& t, const py::object& s, std::size_t limit) {
            Rational tt = from_py(t);
            Rational ss = s.is_none() ? tt : from_py(s);
            return to_py(upsilon2(realize_text(text, limit), tt, ss));
        },
        py::arg("expr"), py::arg("t"), py::arg("s") = py::none(), py::arg("max_generators") = kDefaultGeneratorLimit,
        "Secondary Upsilon at (t, s); s defaults to t. Returns math.inf when trivial.");

    m.def(
        "jumps",
        [](const std::string& text, const py::object& max_t, std::size_t limit) {
            py::list out;
            UpsilonEngine eng(realize_text(text, limit));
            for (const auto& r : eng.jump_values(from_py(max_t))) {
                if (r.is_jump) out.append(py::make_tuple(to_py(r.t), to_py(r.upsilon2)));
            }
            return out;
        },
        py::arg("expr"), py::arg("max_t") = 2, py::arg("max_generators") = kDefaultGeneratorLimit,
        "Jump values t in (0, max_t] with Upsilon2(t, t).");

    m.def(
        "verify",
        [](bool fast) {
            py::list out;
            for (const auto& r : run_reproduction_suite({fast, {}})) {
                out.append(py::make_tuple(r.id, r.passed, format_result(r)));
            }
            return out;
        },
        py::arg("fast") = false, "Run the reproduction suite; one (id, passed, line) per check.");
}
