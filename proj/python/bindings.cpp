#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yangian/berezinian.hpp"
#include "yangian/checks.hpp"
#include "yangian/expression.hpp"

namespace py = pybind11;
using namespace yangian;

namespace {

Rational to_rational(const py::handle& value) {
    if (py::isinstance<py::int_>(value)) return parse_rational(py::str(value).cast<std::string>());
    if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
    // fractions.Fraction and anything else exposing numerator/denominator
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
        const auto num = py::str(value.attr("numerator")).cast<std::string>();
        const auto den = py::str(value.attr("denominator")).cast<std::string>();
        return parse_rational(num + "/" + den);
    }
    throw py::type_error("expected an int, a Fraction or a string like '3/4'");
}

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

Convention convention_of(const std::string& text, const Shape& shape, int order, std::size_t max_terms) {
    if (text == "auto") return resolve_convention(shape, order, max_terms);
    return parse_convention(text);
}

std::vector<Element> coefficients(const PowerSeries& s) { return s.coefficients(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Normal forms and identity checks in the super Yangian Y(gl(m|n))";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ExpressionError>(m, "ExpressionError", base.ptr());
    py::register_exception<InvalidIndex>(m, "InvalidIndex", base.ptr());
    py::register_exception<UnknownCheck>(m, "UnknownCheck", base.ptr());
    py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", base.ptr());

    py::class_<Shape>(m, "Shape")
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def_readonly("m", &Shape::m)
        .def_readonly("n", &Shape::n)
        .def("size", &Shape::size)
        .def("parity", &Shape::parity)
        .def("__str__", &Shape::str)
        .def("__repr__", [](const Shape& s) { return "Shape" + s.str(); })
        .def(py::self == py::self);

    py::class_<Element>(m, "Element")
        .def("__str__", &Element::str)
        .def("__repr__", [](const Element& e) { return "<Element " + e.str() + ">"; })
        .def("__len__", &Element::size)
        .def("__bool__", [](const Element& e) { return !e.is_zero(); })
        .def("is_zero", &Element::is_zero)
        .def("degree", &Element::degree)
        .def("parity", &Element::parity)
        .def("constant_term", [](const Element& e) { return fraction(e.constant_term()); })
        .def("terms",
             [](const Element& e) {
                 py::list out;
                 for (const auto& [word, c] : e.terms()) {
                     py::list gens;
                     for (const Generator g : word) gens.append(py::make_tuple(g.i(), g.j(), g.level()));
                     out.append(py::make_tuple(py::tuple(gens), fraction(c)));
                 }
                 return out;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__mul__", [](const Element& e, const py::object& c) { return e * to_rational(c); })
        .def("__rmul__", [](const Element& e, const py::object& c) { return to_rational(c) * e; })
        .def("bracket", [](const Element& a, const Element& b) { return a.algebra().supercommutator(a, b); });

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init([](int m_, int n_, std::size_t max_terms) {
                 return std::const_pointer_cast<Algebra>(Algebra::create(Shape(m_, n_), {max_terms}));
             }),
             py::arg("m"), py::arg("n"), py::arg("max_terms") = 0)
        .def_property_readonly("shape", &Algebra::shape)
        .def("t", &Algebra::t, py::arg("i"), py::arg("j"), py::arg("r"))
        .def("scalar", [](const Algebra& a, const py::object& c) { return a.scalar(to_rational(c)); })
        .def("one", &Algebra::one)
        .def("zero", &Algebra::zero)
        .def("relation",
             [](const Algebra& a, int i, int j, int r, int k, int l, int s) {
                 return a.coeff_relation(Generator(i, j, r), Generator(k, l, s));
             })
        .def("bracket", &Algebra::supercommutator)
        .def("memo_size", &Algebra::memo_size);

    m.def(
        "nf",
        [](const std::string& expr, int m_, int n_, int order, const std::string& convention,
           std::size_t max_terms) {
            const Shape shape(m_, n_);
            if (order == 0) order = default_order(shape);
            ExpressionContext context(Algebra::create(shape, {max_terms}), order,
                                      convention_of(convention, shape, order, max_terms));
            return render(context.evaluate(expr));
        },
        py::arg("expr"), py::arg("m"), py::arg("n"), py::arg("order") = 0, py::arg("convention") = "plain",
        py::arg("max_terms") = 0, "Normal form of a text expression, rendered as text.");

    m.def(
        "series",
        [](const std::string& what, int m_, int n_, int order, const std::string& convention) {
            const Shape shape(m_, n_);
            if (order == 0) order = default_order(shape);
            const AlgebraPtr algebra = Algebra::create(shape);
            if (what == "qdet") return coefficients(quantum_determinant(algebra, order));
            if (what == "ber")
                return coefficients(berezinian_sum(algebra, order, convention_of(convention, shape, order, 0)));
            throw py::value_error("series expects 'ber' or 'qdet'");
        },
        py::arg("what"), py::arg("m"), py::arg("n"), py::arg("order") = 0, py::arg("convention") = "plain",
        "Coefficients of u^0..u^-order of the Berezinian or the quantum determinant.");

    m.def("checks", &check_names);
    m.def("check_applies", [](const std::string& name, int m_, int n_) { return check_applies(name, Shape(m_, n_)); });
    m.def("default_order", [](int m_, int n_) { return default_order(Shape(m_, n_)); });

    m.def(
        "_run_check",
        [](const std::string& name, int m_, int n_, int order, const std::string& convention, bool eval,
           std::size_t max_terms) {
            CheckOptions options;
            options.order = order;
            options.convention = convention == "auto" ? std::nullopt : std::optional(parse_convention(convention));
            options.eval_oracle = eval;
            options.max_terms = max_terms;
            CheckReport report;
            {
                py::gil_scoped_release release;
                report = run_check(name, Shape(m_, n_), options);
            }
            return to_json(report).dump();
        },
        py::arg("name"), py::arg("m"), py::arg("n"), py::arg("order") = 0, py::arg("convention") = "plain",
        py::arg("eval") = true, py::arg("max_terms") = 0);

    m.def(
        "_run_oracle",
        [](const std::string& which, int m_, int n_) { return to_json(run_oracle(which, Shape(m_, n_))).dump(); },
        py::arg("which"), py::arg("m"), py::arg("n"));
}
