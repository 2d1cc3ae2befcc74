#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhaar/haar.hpp"
#include "qhaar/table_io.hpp"
#include "qhaar/verify.hpp"

namespace py = pybind11;
using namespace qhaar;

namespace {

py::object to_fraction(const mpq_class& v) {
  return py::module_::import("fractions").attr("Fraction")(v.get_str());
}

py::dict decomp_to_dict(const Decomp& d) {
  py::dict out;
  for (const auto& [e, c] : d) out[py::str(e.key())] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qhaar, m) {
  m.doc() = "Exact Haar states of monomials on the quantized coordinate ring of SL_q(3)";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pole_error>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<inconsistency_error>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<QRational>(m, "QValue", "Rational function in q in canonical form")
      .def(py::init([](long v) { return QRational(v); }), py::arg("value") = 0)
      .def_static("q_pow", &QRational::q_pow, py::arg("k"))
      .def_static("from_json", &qrational_from_json, py::arg("text"))
      .def("to_json", &qrational_to_json)
      .def("is_zero", &QRational::is_zero)
      .def("is_one", &QRational::is_one)
      .def("eval_at",
           [](const QRational& v, long num, long den) {
             if (den == 0) throw std::domain_error("evaluation point with zero denominator");
             return to_fraction(v.eval_at(mpq_class(num, den)));
           },
           py::arg("num"), py::arg("den") = 1,
           "Exact value at the rational point num/den, as a Fraction")
      .def("latex", &QRational::to_latex)
      .def("__str__", &QRational::to_string)
      .def("__repr__", [](const QRational& v) { return "QValue(" + v.to_string() + ")"; })
      .def("__eq__", [](const QRational& a, const QRational& b) { return a == b; })
      .def("__add__", [](const QRational& a, const QRational& b) { return a + b; })
      .def("__sub__", [](const QRational& a, const QRational& b) { return a - b; })
      .def("__mul__", [](const QRational& a, const QRational& b) { return a * b; })
      .def("__truediv__", [](const QRational& a, const QRational& b) { return a / b; })
      .def("__neg__", [](const QRational& a) { return -a; })
      .def("__hash__", [](const QRational& a) { return py::hash(py::str(a.to_string())); });

  py::class_<HaarContext>(m, "Context", "Haar computation context with table caching")
      .def(py::init([](int max_order, const std::string& cache_dir, bool use_cache) {
             return HaarContext(HaarContext::Options{max_order, cache_dir, use_cache});
           }),
           py::arg("max_order") = 4, py::arg("cache_dir") = ".qhaar",
           py::arg("use_cache") = true)
      .def("haar",
           [](HaarContext& cx, const std::string& text) { return cx.haar(Word::parse(text)); },
           py::arg("monomial"), "Haar state of a monomial given as text")
      .def("haar_combination",
           [](HaarContext& cx, const std::string& text) {
             return cx.haar(parse_combination(text));
           },
           py::arg("expr"), "Haar state of a linear combination such as 'aeekak - q*aefhak'")
      .def("limit",
           [](HaarContext& cx, const std::string& text) {
             return to_fraction(cx.weingarten_limit(parse_combination(text)));
           },
           py::arg("expr"), "Exact value at q = 1 of the Haar state of the combination")
      .def("reduce",
           [](HaarContext& cx, const std::string& text) {
             return decomp_to_dict(cx.reducer().reduce(Word::parse(text)));
           },
           py::arg("monomial"),
           "Decomposition over the standard-monomial basis, keyed by c1.c2.c3.c4.c5.c6")
      .def("table",
           [](HaarContext& cx, int order, const std::string& method) {
             const HaarTable& t =
                 method == "algorithm" ? cx.full_algorithm(order) : cx.solve_order(order);
             py::dict out;
             for (const auto& [e, v] : t.values) out[py::str(e.key())] = v;
             return out;
           },
           py::arg("order"), py::arg("method") = "solver")
      .def("table_json",
           [](HaarContext& cx, int order, const std::string& method) {
             const HaarTable& t =
                 method == "algorithm" ? cx.full_algorithm(order) : cx.solve_order(order);
             return table_to_json(t);
           },
           py::arg("order"), py::arg("method") = "solver")
      .def("relation",
           [](HaarContext& cx, const std::string& eq, const std::string& cmp) {
             LinearRelation rel = cx.derive_linear_relation(StdExponents::parse_key(eq),
                                                            StdExponents::parse_key(cmp));
             py::dict out;
             out["coefficients"] = decomp_to_dict(rel.coefficients);
             out["rhs_basis"] = rel.rhs_basis.key();
             out["rhs_coeff"] = rel.rhs_coeff;
             return out;
           },
           py::arg("equation_basis"), py::arg("comparing_basis"))
      .def("source_matrix_solution",
           [](HaarContext& cx, int m) {
             py::dict out;
             for (const auto& [e, v] : cx.source_matrix_solution(m)) out[py::str(e.key())] = v;
             return out;
           },
           py::arg("m"))
      .def("verify",
           [](HaarContext& cx, const std::string& suite) {
             verify::Report report;
             if (suite == "tables")
               report = verify::verify_tables(cx);
             else if (suite == "appendixC")
               report = verify::verify_appendix_identities(cx);
             else if (suite == "symmetry")
               report = verify::verify_symmetry(cx);
             else if (suite == "weingarten")
               report = verify::verify_weingarten(cx);
             else if (suite == "all")
               report = verify::verify_all(cx);
             else
               throw std::domain_error("unknown suite: " + suite);
             py::list out;
             for (const auto& c : report.checks)
               out.append(py::make_tuple(c.name, c.passed, c.detail));
             return out;
           },
           py::arg("suite"));

  m.def("haar_order1",
        [](const std::vector<int>& perm) { return haar_order1(perm); },
        py::arg("perm"), "(-q)^inversions / [n]_{q^2}! for a permutation of 1..n");
  m.def("basis",
        [](int m) {
          py::list out;
          for (const auto& e : enumerate_basis(m)) out.append(e.key());
          return out;
        },
        py::arg("order"));
  m.def("std_word",
        [](const std::string& key) { return std_word(StdExponents::parse_key(key)).to_string(); },
        py::arg("key"));
  m.def("gamma",
        [](const std::string& text) { return gamma(Word::parse(text)).to_string(); },
        py::arg("monomial"));
  m.def("omega",
        [](const std::string& text) { return omega(Word::parse(text)).to_string(); },
        py::arg("monomial"));
  m.def("counting_matrix", [](const std::string& text) {
    CountingMatrix c = counting_matrix(Word::parse(text));
    std::vector<std::vector<int>> rows(3, std::vector<int>(3));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) rows[i - 1][j - 1] = c.at(i, j);
    return rows;
  });
}
