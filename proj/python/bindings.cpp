#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tgw/errors.hpp"
#include "tgw/io.hpp"
#include "tgw/liesuper.hpp"
#include "tgw/support.hpp"
#include "tgw/tgwdatum.hpp"

namespace py = pybind11;
using namespace tgw;

namespace {

// Coefficients cross the boundary as fractions.Fraction.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  const py::object frac = py::module_::import("fractions").attr("Fraction")(obj);
  return parse_rational(py::str(frac).cast<std::string>());
}

py::object from_rational(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(q.get_str()); }

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GammaMatrix make_gamma(const std::string& sign, std::vector<int> parity, std::vector<std::vector<long>> rows) {
  return GammaMatrix(Signature(parse_variant(sign), std::move(parity)), std::move(rows));
}

std::vector<Letter> letters(const py::object& word) {
  if (py::isinstance<py::str>(word)) return parse_word(word.cast<std::string>());
  std::vector<Letter> out;
  for (const auto& item : word) {
    const auto s = item.cast<std::string>();
    const auto parsed = parse_word(s);
    if (parsed.size() != 1) throw InvalidInput("expected one letter, got \"" + s + "\"");
    out.push_back(parsed[0]);
  }
  return out;
}

Box box_arg(const GammaMatrix& g, const py::object& box) {
  if (py::isinstance<py::int_>(box)) return Box::cube(g.cols(), box.cast<long>());
  if (py::isinstance<py::str>(box)) {
    Box b = parse_box(box.cast<std::string>());
    if (b.dim() == 1 && g.cols() > 1) return Box{std::vector<std::pair<long, long>>(g.cols(), b.ranges[0])};
    return b;
  }
  return Box{box.cast<std::vector<std::pair<long, long>>>()};
}

py::dict terms_dict(const SuperElement& a) {
  py::dict out;
  for (const auto& [m, c] : a.terms()) out[py::tuple(py::cast(m.raw()))] = from_rational(c);
  return out;
}

py::dict terms_dict(const BaseRingElement& r) {
  py::dict out;
  for (const auto& [e, c] : r.terms()) out[py::tuple(py::cast(e))] = from_rational(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clifford/Weyl superalgebras, TGW data and graded supports";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<InvalidInput> invalid_input(m, "InvalidInput", error.ptr());
  static py::exception<InvalidGamma> invalid_gamma(m, "InvalidGamma", error.ptr());
  static py::exception<UndefinedDegree> undefined_degree(m, "UndefinedDegree", error.ptr());
  static py::exception<Inhomogeneous> inhomogeneous(m, "Inhomogeneous", error.ptr());
  static py::exception<Nilpotent> nilpotent(m, "Nilpotent", error.ptr());
  static py::exception<ResourceLimit> resource_limit(m, "ResourceLimit", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidGamma& e) {
      PyErr_SetString(invalid_gamma.ptr(), e.what());
    } catch (const InvalidInput& e) {
      PyErr_SetString(invalid_input.ptr(), e.what());
    } catch (const UndefinedDegree& e) {
      PyErr_SetString(undefined_degree.ptr(), e.what());
    } catch (const Inhomogeneous& e) {
      PyErr_SetString(inhomogeneous.ptr(), e.what());
    } catch (const Nilpotent& e) {
      PyErr_SetString(nilpotent.ptr(), e.what());
    } catch (const ResourceLimit& e) {
      PyErr_SetString(resource_limit.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Signature>(m, "Signature")
      .def(py::init([](const std::string& sign, std::vector<int> parity) {
             return Signature(parse_variant(sign), std::move(parity));
           }),
           py::arg("sign"), py::arg("parity"))
      .def_property_readonly("sign", [](const Signature& s) { return to_string(s.variant()); })
      .def_property_readonly("parity", &Signature::parities)
      .def("__len__", &Signature::size)
      .def("lam", &Signature::lambda, py::arg("i"), py::arg("j"))
      .def("is_clifford", &Signature::is_clifford, py::arg("i"))
      .def(py::self == py::self)
      .def("__repr__", [](const Signature& s) {
        std::string out = "Signature('" + to_string(s.variant()) + "', [";
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s.parity(i));
        return out + "])";
      });

  py::class_<BaseRingElement>(m, "BaseRingElement")
      .def_static("u", &BaseRingElement::u, py::arg("sig"), py::arg("i"))
      .def_static(
          "constant", [](const Signature& s, const py::object& c) { return BaseRingElement::constant(s, to_rational(c)); },
          py::arg("sig"), py::arg("c"))
      .def_property_readonly("signature", &BaseRingElement::signature)
      .def("terms", [](const BaseRingElement& r) { return terms_dict(r); })
      .def("is_zero", &BaseRingElement::is_zero)
      .def("evaluate",
           [](const BaseRingElement& r, const std::vector<py::object>& point) {
             std::vector<Rational> pt;
             for (const auto& v : point) pt.push_back(to_rational(v));
             return from_rational(r.evaluate(pt));
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const BaseRingElement& r, const py::object& c) { return to_rational(c) * r; })
      .def("__rmul__", [](const BaseRingElement& r, const py::object& c) { return to_rational(c) * r; })
      .def("__str__", [](const BaseRingElement& r) { return to_string(r); })
      .def("__repr__", [](const BaseRingElement& r) { return "BaseRingElement(" + to_string(r) + ")"; });

  m.def(
      "tau_apply",
      [](const std::vector<long>& exponents, const BaseRingElement& r) { return tau_apply(Automorphism{exponents}, r); },
      py::arg("exponents"), py::arg("r"), "Apply tau_1^a1 ... tau_n^an to a base ring element");

  py::class_<SuperElement>(m, "SuperElement")
      .def_static("one", &SuperElement::one, py::arg("sig"))
      .def_static("x", &SuperElement::x, py::arg("sig"), py::arg("i"))
      .def_static("d", &SuperElement::d, py::arg("sig"), py::arg("i"))
      .def_static(
          "scalar", [](const Signature& s, const py::object& c) { return SuperElement::scalar(s, to_rational(c)); },
          py::arg("sig"), py::arg("c"))
      .def_static("embed", &iota_embed, py::arg("r"), "Image of a base ring element, u_i -> d_i x_i")
      .def_property_readonly("signature", &SuperElement::signature)
      .def("terms", [](const SuperElement& a) { return terms_dict(a); },
           "Map from (a1, b1, ..., an, bn) to the coefficient of x1^a1 d1^b1 ... xn^an dn^bn")
      .def("is_zero", &SuperElement::is_zero)
      .def("degree", &degree_of)
      .def("involution", &involution)
      .def("project_zero", &project_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const SuperElement& a, const py::object& c) { return to_rational(c) * a; })
      .def("__rmul__", [](const SuperElement& a, const py::object& c) { return to_rational(c) * a; })
      .def("__str__", [](const SuperElement& a) { return to_string(a); })
      .def("__repr__", [](const SuperElement& a) { return "SuperElement(" + to_string(a) + ")"; });

  py::class_<GammaMatrix>(m, "GammaMatrix")
      .def(py::init(&make_gamma), py::arg("sign"), py::arg("parity"), py::arg("rows"))
      .def_static("from_json", &parse_gamma_json, py::arg("text"))
      .def_static("load", &read_gamma_file, py::arg("path"))
      .def("to_json", [](const GammaMatrix& g) { return gamma_to_json(g).dump(); })
      .def_property_readonly("signature", &GammaMatrix::signature)
      .def_property_readonly("rows", &GammaMatrix::row_vectors)
      .def_property_readonly("cols", &GammaMatrix::cols)
      .def("apply", [](const GammaMatrix& g, const std::vector<long>& v) {
        if (v.size() != g.cols()) throw InvalidInput("vector length does not match the number of columns");
        return g.apply(v);
      })
      .def("phi", [](const GammaMatrix& g, const std::string& letter) {
        const auto w = parse_word(letter);
        if (w.size() != 1) throw InvalidInput("expected one letter");
        return phi_generator(g, w[0]);
      });

  m.def("validate", [](const GammaMatrix& g) { return to_python(to_json(validate_gamma(g))); }, py::arg("gamma"));
  m.def("datum", [](const GammaMatrix& g) { return to_python(to_json(derive_datum(g))); }, py::arg("gamma"));
  m.def(
      "consistency", [](const GammaMatrix& g) { return to_python(to_json(consistency_check(derive_datum(g)))); },
      py::arg("gamma"));
  m.def(
      "eval_word",
      [](const GammaMatrix& g, const py::object& word) {
        require_valid(g);
        const auto w = letters(word);
        const auto r = eval_word(g, w);
        return py::make_tuple(r.degree, r.image);
      },
      py::arg("gamma"), py::arg("word"), "Degree and image of a word such as \"X1 Y2\" or [\"X1\", \"Y2\"]");

  m.def(
      "is_in_support",
      [](const GammaMatrix& g, const std::vector<long>& point) -> py::object {
        require_valid(g);
        if (point.size() != g.cols()) throw InvalidInput("degree length does not match the number of columns");
        const auto w = is_in_support(g, point);
        if (!w) return py::none();
        return to_python(to_json(*w));
      },
      py::arg("gamma"), py::arg("point"), "Witness as [[column, sign], ...], or None outside the support");
  m.def(
      "oracle_membership",
      [](const GammaMatrix& g, const std::vector<long>& point, std::size_t cap) {
        require_valid(g);
        if (point.size() != g.cols()) throw InvalidInput("degree length does not match the number of columns");
        return oracle_membership(g, point, cap);
      },
      py::arg("gamma"), py::arg("point"), py::arg("cap") = default_oracle_cap);
  m.def(
      "support",
      [](const GammaMatrix& g, const py::object& box, bool even_lattice, std::size_t cap, std::size_t workers) {
        require_valid(g);
        const Box b = box_arg(g, box);
        if (b.dim() != g.cols()) throw InvalidInput("box dimension does not match the number of columns");
        py::list out;
        std::vector<SupportPoint> pts;
        {
          py::gil_scoped_release release;
          pts = enumerate_support(g, b, even_lattice, cap, workers);
        }
        for (const auto& p : pts) out.append(to_python(support_line(p.point, p.witness)));
        return out;
      },
      py::arg("gamma"), py::arg("box"), py::arg("even_lattice") = false, py::arg("cap") = default_box_cap,
      py::arg("workers") = 0, "Support points in a box: a radius, a string like \"-2:2,0:3\", or a list of (lo, hi)");
  m.def(
      "injectivity",
      [](const GammaMatrix& g, const py::object& box, std::size_t cap) {
        const Box b = box_arg(g, box);
        if (b.dim() != g.cols()) throw InvalidInput("box dimension does not match the number of columns");
        return to_python(to_json(injectivity_report(g, b, cap)));
      },
      py::arg("gamma"), py::arg("box") = 3, py::arg("cap") = default_box_cap);

  m.def(
      "calibrate",
      [](const std::string& family, std::size_t p, std::size_t q, std::optional<std::string> realization) -> py::object {
        std::optional<Realization> r;
        if (realization) r = parse_realization(*realization);
        const auto cal = calibrate(preset(parse_family(family), p, q, r));
        if (!cal) return py::none();
        return to_python(to_json(*cal));
      },
      py::arg("family"), py::arg("p"), py::arg("q"), py::arg("realization") = py::none());
  m.def(
      "check_lie",
      [](const std::string& family, std::size_t p, std::size_t q, std::optional<std::string> realization,
         bool solve) {
        std::optional<Realization> r;
        if (realization) r = parse_realization(*realization);
        const auto pr = preset(parse_family(family), p, q, r);
        Calibration cal = Calibration::unit(pr.e.size(), pr.h.size());
        if (solve) {
          const auto solved = calibrate(pr);
          if (!solved) throw InvalidInput("no calibration makes every relation vanish");
          cal = *solved;
        }
        py::dict out;
        out["preset"] = pr.name();
        out["realization"] = to_string(pr.realization);
        out["residuals"] = to_python(to_json(check_relations(pr, cal)));
        out["triangle"] = to_python(to_json(check_triangle(pr, cal)));
        return out;
      },
      py::arg("family"), py::arg("p"), py::arg("q"), py::arg("realization") = py::none(), py::arg("calibrate") = true);
}
