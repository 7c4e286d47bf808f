#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "curvemult/errors.hpp"
#include "curvemult/germ.hpp"
#include "curvemult/multiplier.hpp"
#include "curvemult/oracle.hpp"

namespace py = pybind11;
using namespace curvemult;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Rational rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  // int or Fraction
  const std::string num = py::str(h.attr("numerator")), den = py::str(h.attr("denominator"));
  return make_rational(Integer(num), Integer(den));
}

py::int_ pyint(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::list ints(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(pyint(x));
  return out;
}

std::vector<BivariatePolynomial> polys(const std::vector<std::string>& src) {
  std::vector<BivariatePolynomial> out;
  for (const auto& s : src) out.push_back(BivariatePolynomial::parse(s));
  return out;
}

Germ make_germ(const std::optional<std::string>& poly, const std::optional<std::string>& series,
               const std::optional<std::string>& charseq) {
  if (poly && !series && !charseq) return Germ::from_polynomial(BivariatePolynomial::parse(*poly));
  if (charseq && !poly) {
    std::optional<PuiseuxSeries> s;
    if (series) s = PuiseuxSeries::parse(*series);
    return Germ::from_charseq(CharacteristicSequence::parse(*charseq), s);
  }
  if (series && !poly) return Germ::from_series(PuiseuxSeries::parse(*series));
  throw ParseError("give exactly one of poly, series, charseq (optionally with series)");
}

py::dict ideal_dict(const IdealPresentation& I) {
  py::dict d;
  d["alpha"] = fraction(I.alpha);
  py::list gens, forms;
  for (const auto& m : I.generators) gens.append(to_string(m));
  if (I.polynomial_forms)
    for (const auto& p : *I.polynomial_forms) forms.append(p.to_string());
  d["generators"] = gens;
  d["polynomials"] = forms;
  return d;
}

}  // namespace

PYBIND11_MODULE(curvemult, m) {
  m.doc() = "Multiplier ideals and jumping numbers of irreducible plane curve germs";

  static py::exception<CurveError> curve_error(m, "CurveError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CurveError& e) {
      py::set_error(curve_error, (e.id() + ": " + e.what()).c_str());
    }
  });

  py::class_<Germ>(m, "Germ")
      .def(py::init(&make_germ), py::kw_only(), py::arg("poly") = py::none(), py::arg("series") = py::none(),
           py::arg("charseq") = py::none())
      .def_property_readonly("characteristic", [](const Germ& g) { return g.characteristic.to_string(); })
      .def_property_readonly("n", [](const Germ& g) { return pyint(g.characteristic.n()); })
      .def_property_readonly("exponents", [](const Germ& g) { return ints(g.characteristic.exponents()); })
      .def_property_readonly("root", [](const Germ& g) { return g.root.to_string(); })
      .def_property_readonly("polynomial", [](const Germ& g) { return g.defining_polynomial().to_string(); })
      .def_property_readonly("multiplicities", [](const Germ& g) { return ints(g.multiplicities.values); })
      .def_property_readonly("gamma", [](const Germ& g) { return g.indices.gamma; })
      .def_property_readonly("tau", [](const Germ& g) { return g.indices.tau; })
      .def_property_readonly("proximity_matrix",
                             [](const Germ& g) {
                               py::list rows;
                               for (const auto& r : g.proximity.P) rows.append(ints(r));
                               return rows;
                             })
      .def("x_row", [](const Germ& g, std::size_t i) { return ints(g.proximity.row(i)); }, py::arg("i"))
      .def_property_readonly("a", [](const Germ& g) { return ints(g.divisors.a); })
      .def_property_readonly("b", [](const Germ& g) { return ints(g.divisors.b); })
      .def_property_readonly("factors",
                             [](const Germ& g) {
                               py::list out;
                               for (const auto& f : g.factors.factors) out.append(f.to_string());
                               return out;
                             })
      .def("lct", [](const Germ& g) { return fraction(lct(g.factors, g.divisors)); })
      .def("jumping_numbers",
           [](const Germ& g) {
             py::list out;
             for (const auto& j : jumping_numbers(g.factors, g.divisors))
               out.append(py::make_tuple(fraction(j.value), to_string(j.witness)));
             return out;
           })
      .def("multiplier_ideal",
           [](const Germ& g, const py::object& alpha) {
             return ideal_dict(multiplier_ideal(rational(alpha), g.factors, g.divisors));
           },
           py::arg("alpha"))
      .def("rho",
           [](const Germ& g, const std::string& poly) {
             return fraction(rho_poly(BivariatePolynomial::parse(poly), g.factors, g.divisors).value);
           },
           py::arg("poly"))
      .def("rho_full",
           [](const Germ& g, const std::string& poly) {
             const auto t = blowup_resolution(g.defining_polynomial(), g.root);
             return fraction(rho_full(BivariatePolynomial::parse(poly), t).value);
           },
           py::arg("poly"))
      .def("blowup_multiplicities",
           [](const Germ& g) {
             return ints(blowup_resolution(g.defining_polynomial(), g.root).multiplicities().values);
           })
      .def("__repr__", [](const Germ& g) { return "<Germ " + g.characteristic.to_string() + " root " + g.root.to_string() + ">"; });

  m.def("multiplicity_sequence",
        [](const std::string& cs) { return ints(multiplicity_sequence(euclid_chain(CharacteristicSequence::parse(cs))).values); },
        py::arg("charseq"));
  m.def("characteristic_from_multiplicities",
        [](const std::vector<long>& ms) {
          MultiplicitySequence seq;
          for (long v : ms) seq.values.emplace_back(v);
          return characteristic_from_multiplicities(seq).to_string();
        },
        py::arg("multiplicities"));
  m.def("bezout_lift",
        [](long a, long b, long u) {
          const auto [s, t] = bezout_lift(a, b, u);
          return py::make_tuple(pyint(s), pyint(t));
        },
        py::arg("a"), py::arg("b"), py::arg("u"));
  m.def("ideal_equal",
        [](const std::vector<std::string>& A, const std::vector<std::string>& B, unsigned N) {
          return ideal_equal(polys(A), polys(B), N);
        },
        py::arg("a"), py::arg("b"), py::arg("cap") = 12);
  m.def("run",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a CLI command; returns (exit code, stdout, stderr).");
}
