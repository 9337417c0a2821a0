#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpcount/counting.hpp"
#include "lpcount/errors.hpp"
#include "lpcount/exactmath.hpp"
#include "lpcount/identities.hpp"
#include "lpcount/path_model.hpp"
#include "lpcount/symbolic.hpp"
#include "lpcount/verify.hpp"

namespace py = pybind11;
using namespace lpcount;

namespace {

using Coords = std::vector<Coord>;

py::int_ to_py(const BigCount& x) {
  const std::string digits = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

BigCount from_py(const py::handle& obj) {
  return BigCount(py::str(obj).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.get_num()), to_py(r.get_den()));
}

Coords coords_of(const auto& tuple) { return Coords(tuple.begin(), tuple.end()); }

Engine engine_from(const std::string& name) {
  auto e = parse_engine(name);
  if (!e) throw py::value_error("unknown engine '" + name + "'");
  return *e;
}

py::list rf_terms(const RFPolynomial& poly) {
  py::list out;
  for (const RFTerm& t : poly.terms()) {
    out.append(py::make_tuple(to_fraction(t.coeff), py::tuple(py::cast(coords_of(t.exponents)))));
  }
  return out;
}

py::dict monomial_terms(const MonomialPolynomial& poly) {
  py::dict out;
  for (const auto& [e, c] : poly.terms()) out[py::tuple(py::cast(e))] = to_fraction(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting of lattice paths restricted by a given path";

  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<PathParseError>(m, "PathParseError", PyExc_ValueError);

  // paths
  m.def("delta", [](const Coords& p) { return coords_of(delta(HeightPath(p))); }, py::arg("heights"));
  m.def("sigma", [](const Coords& v) { return coords_of(sigma(DiffVector(v))); }, py::arg("diffs"));
  m.def("word_to_heights", [](const std::string& w) { return coords_of(word_to_heights(NEWord(w))); },
        py::arg("word"));
  m.def("heights_to_word",
        [](const Coords& p, Coord terminal) { return heights_to_word(HeightPath(p), terminal).steps(); },
        py::arg("heights"), py::arg("terminal_height"));
  m.def("is_restricted_by",
        [](const Coords& q, const Coords& p) { return is_restricted_by(HeightPath(q), HeightPath(p)); },
        py::arg("q"), py::arg("p"));
  m.def("in_polytope",
        [](const Coords& x, const Coords& v) { return in_polytope(LatticePoint(x), DiffVector(v)); },
        py::arg("point"), py::arg("diffs"));
  m.def("parse_path", [](const std::string& text) { return coords_of(parse_path(text)); },
        py::arg("text"), "Heights of a path written as w:..., h:... or d:...");

  // exact arithmetic
  m.def("binom", [](std::int64_t n, std::int64_t k) { return to_py(binom(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("rising_factorial", [](std::int64_t a, std::uint64_t k) { return to_py(rising_factorial(a, k)); },
        py::arg("a"), py::arg("m"));
  m.def("factorial", [](std::uint64_t n) { return to_py(factorial(n)); }, py::arg("n"));
  m.def("catalan", [](std::uint64_t n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("det", [](const std::vector<std::vector<py::object>>& rows) {
        std::vector<std::vector<BigCount>> big(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (const auto& x : rows[i]) big[i].push_back(from_py(x));
        }
        return to_py(det_int(IntMatrix(big)));
      }, py::arg("rows"));

  // counting
  m.def("count",
        [](const Coords& p, const std::string& engine, std::size_t theorem_cap) {
          return to_py(count(HeightPath(p), engine_from(engine), {theorem_cap, kDefaultMonomialCap}));
        },
        py::arg("heights"), py::arg("engine") = "recurrence", py::arg("theorem_cap") = kDefaultTheoremCap);
  m.def("count_recurrence", [](const Coords& v) { return to_py(count_recurrence(DiffVector(v))); },
        py::arg("diffs"));
  m.def("count_determinant", [](const Coords& p) { return to_py(count_determinant(HeightPath(p))); },
        py::arg("heights"));
  m.def("count_triangular", [](const Coords& p) { return to_py(count_triangular(HeightPath(p))); },
        py::arg("heights"));
  m.def("count_theorem",
        [](const Coords& p, std::size_t cap) { return to_py(count_theorem(HeightPath(p), cap)); },
        py::arg("heights"), py::arg("cap") = kDefaultTheoremCap);
  m.def("dp_oracle", [](const Coords& p) { return to_py(dp_oracle(HeightPath(p))); }, py::arg("heights"));
  m.def("monomial_oracle",
        [](const Coords& p, std::uint64_t cap) { return to_py(monomial_oracle(HeightPath(p), cap)); },
        py::arg("heights"), py::arg("cap") = kDefaultMonomialCap);
  m.def("count_fixed_endpoint",
        [](const Coords& p, Coord terminal) { return to_py(count_fixed_endpoint(HeightPath(p), terminal)); },
        py::arg("heights"), py::arg("terminal_height"));
  m.def("macmahon_total", [](std::uint64_t n, std::uint64_t mm) { return to_py(macmahon_total(n, mm)); },
        py::arg("n"), py::arg("m"));

  m.def("enumerate_polytope", [](const Coords& v) {
        py::list out;
        for (const LatticePoint& x : enumerate_polytope(DiffVector(v))) {
          out.append(py::tuple(py::cast(coords_of(x))));
        }
        return out;
      }, py::arg("diffs"));

  // symbolic
  m.def("symbolic_lp",
        [](std::size_t n, std::size_t cap) { return rf_terms(symbolic_lp(n, cap)); },
        py::arg("n"), py::arg("cap") = kDefaultTheoremCap,
        "Rising-factorial terms as (coefficient, lattice point) pairs");
  m.def("symbolic_lp_text",
        [](std::size_t n, std::size_t cap) { return serialize(symbolic_lp(n, cap)); },
        py::arg("n"), py::arg("cap") = kDefaultTheoremCap);
  m.def("expand_symbolic_lp",
        [](std::size_t n) { return monomial_terms(expand(symbolic_lp(n))); }, py::arg("n"),
        "Monomial coefficients keyed by exponent tuples in v_1..v_n order");
  m.def("evaluate_symbolic_lp",
        [](const Coords& v) { return to_fraction(evaluate(symbolic_lp(v.size(), v.size()), DiffVector(v))); },
        py::arg("diffs"));
  m.def("verify_det_identity", &verify_det_identity, py::arg("n"), py::arg("trials"), py::arg("seed") = 0);

  // identities
  m.def("children", [](const Coords& y) {
        std::vector<Coords> out;
        for (const auto& x : children(LatticePoint(y)).children) out.push_back(coords_of(x));
        return out;
      }, py::arg("point"));
  m.def("parent", [](const Coords& x) { return coords_of(parent(LatticePoint(x))); }, py::arg("point"));
  m.def("lemma_lhs", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return to_py(lemma_lhs(a, b, c)); });
  m.def("lemma_rhs", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return to_py(lemma_rhs(a, b, c)); });
  m.def("lemma_closed", [](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return to_py(lemma_closed(a, b, c)); });
  m.def("vandermonde_gen", [](std::uint64_t d, std::uint64_t e, std::uint64_t f) {
        auto [lhs, rhs] = vandermonde_gen(d, e, f);
        return py::make_tuple(to_py(lhs), to_py(rhs));
      });

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, std::uint64_t seed) {
        auto r = run_suite(name, {seed, kDefaultTheoremCap});
        if (!r) throw py::value_error("unknown suite '" + name + "'");
        py::dict out;
        out["name"] = r->name;
        out["passed"] = r->passed;
        out["cases"] = r->cases;
        out["counterexample"] = r->counterexample;
        return out;
      }, py::arg("name"), py::arg("seed") = 0);
}
