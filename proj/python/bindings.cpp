#include <cmath>
#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moonexp/cli.hpp"
#include "moonexp/deligne.hpp"
#include "moonexp/errors.hpp"
#include "moonexp/etaforms.hpp"
#include "moonexp/hecke.hpp"
#include "moonexp/monster.hpp"
#include "moonexp/supersingular.hpp"

namespace py = pybind11;
using namespace moonexp;

namespace {

py::int_ to_py(const mpz_class& x) {
  const std::string s = x.get_str(16);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 16));
}

mpz_class from_py(const py::int_& x) {
  return mpz_class(py::str(x).cast<std::string>());
}

py::object valuation(const Valuation& v) {
  if (v.is_infinite()) return py::float_(INFINITY);
  return py::int_(v.value());
}

py::list coeff_list(const std::vector<mpz_class>& cs) {
  py::list out;
  for (const auto& c : cs) out.append(to_py(c));
  return out;
}

py::list s2_list(const std::vector<std::pair<Fp2Elem, Fp2Elem>>& pairs) {
  py::list out;
  for (const auto& [x, y] : pairs) out.append(py::make_tuple(py::make_tuple(x.a, x.b), py::make_tuple(y.a, y.b)));
  return out;
}

py::dict row_dict(const SsJ1Row& row) {
  py::dict d;
  d["p"] = row.p;
  d["minus744"] = row.minus744 ? py::object(py::int_(*row.minus744)) : py::object(py::none());
  d["c984"] = row.c984 ? py::object(py::int_(*row.c984)) : py::object(py::none());
  d["other"] = row.other;
  return d;
}

py::dict report_dict(const PrimeReport& r) {
  py::dict d;
  d["p"] = r.p;
  d["vp_monster"] = r.vp_monster;
  d["term_plus"] = valuation(r.term_plus);
  d["term_p"] = valuation(r.term_p);
  d["term_p2"] = valuation(r.term_p2);
  d["rhs11"] = r.rhs11;
  d["rhs12"] = r.rhs12;
  d["m_p"] = r.m_p;
  d["s1"] = r.s1;
  d["s2_pairs"] = s2_list(r.s2_pairs);
  d["table2_row"] = r.table2_row ? py::object(row_dict(*r.table2_row)) : py::object(py::none());
  d["table1_ok"] = r.table1_ok;
  d["table2_ok"] = r.table2_ok;
  if (r.deligne) {
    py::dict del;
    del["K"] = r.deligne->K;
    del["residual_valuation"] = valuation(r.deligne->residual_valuation);
    py::dict a1;
    for (const auto& c : r.deligne->a1) a1[py::int_(c.alpha)] = c.valuation;
    del["a1_valuations"] = a1;
    del["ok"] = r.deligne->ok;
    d["deligne"] = del;
  } else {
    d["deligne"] = py::none();
  }
  d["remarks"] = r.remarks;
  d["expected_discrepancy"] = r.expected_discrepancy;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-series, supersingular loci and p-adic valuations";

  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<QSeries>(m, "QSeries")
      .def(py::init([](std::int64_t lo, const std::vector<py::int_>& coeffs, std::int64_t prec) {
             std::vector<mpz_class> cs;
             for (const auto& c : coeffs) cs.push_back(from_py(c));
             return QSeries(lo, std::move(cs), prec);
           }),
           py::arg("lo"), py::arg("coeffs"), py::arg("prec"))
      .def_property_readonly("lo", &QSeries::lo)
      .def_property_readonly("prec", &QSeries::prec)
      .def_property_readonly("coeffs", [](const QSeries& f) { return coeff_list(f.coeffs()); })
      .def("coeff", [](const QSeries& f, std::int64_t n) { return to_py(f.coeff(n)); })
      .def("truncate", &QSeries::truncate)
      .def("is_zero", &QSeries::is_zero)
      .def("is_constant", &QSeries::is_constant)
      .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
      .def("__sub__", [](const QSeries& a, const QSeries& b) { return a - b; })
      .def("__mul__", [](const QSeries& a, const QSeries& b) { return series_mul(a, b); })
      .def("__rmul__", [](const QSeries& a, const py::int_& c) { return from_py(c) * a; })
      .def("__neg__", [](const QSeries& a) { return -a; })
      .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
      .def("__str__", [](const QSeries& f) { return f.to_string(); })
      .def("__repr__", [](const QSeries& f) { return "QSeries(" + f.to_string() + ")"; });

  m.def("series_inv", &series_inv);
  m.def("vp_min", [](const QSeries& f, std::int64_t p, std::int64_t first, std::int64_t last) {
    return valuation(vp_min(f, p, Window{first, last}));
  }, py::arg("f"), py::arg("p"), py::arg("first"), py::arg("last"));

  m.def("eta_unit_series", &eta_unit_series, py::arg("prec"));
  m.def("j1_series", &j1_series, py::arg("prec"));
  m.def("tn_series", &tn_series, py::arg("level"), py::arg("prec"));
  m.def("hauptmodul_jn", &hauptmodul_jn, py::arg("level"), py::arg("prec"));
  m.def("sn_series", &sn_series, py::arg("level"), py::arg("prec"));
  m.def("jn_plus_series", &jn_plus_series, py::arg("level"), py::arg("prec"));
  m.def("eta_quotient_params", [](std::int64_t level) {
    const EtaParams ep = eta_quotient_params(level);
    return py::make_tuple(ep.d, ep.n);
  }, py::arg("level"));
  m.def("faber_poly", [](int m_) { return coeff_list(faber_poly(m_).poly.coeffs); }, py::arg("m"));
  m.def("u_operator", &u_operator, py::arg("f"), py::arg("n"));
  m.def("v_operator", &v_operator, py::arg("f"), py::arg("n"));

  m.def("ss_j_set", [](std::int64_t p) {
    const SupersingularData data = ss_j_set(p);
    py::dict d;
    d["p"] = data.p;
    d["s1"] = data.s1;
    d["s2_pairs"] = s2_list(data.s2);
    d["m_p"] = data.m_p;
    d["oracle_checked"] = data.oracle_checked;
    return d;
  }, py::arg("p"));
  m.def("ss_j1_table", [](std::int64_t p) { return row_dict(ss_j1_table(p)); }, py::arg("p"));

  m.def("p_j1_up", &p_j1_up, py::arg("p"), py::arg("prec"));
  m.def("vp_p_j1_up", [](std::int64_t p, std::int64_t window) { return valuation(vp_p_j1_up(p, window)); },
        py::arg("p"), py::arg("window") = 60);
  m.def("a1_valuations", [](std::int64_t p) {
    py::dict d;
    for (const auto& c : check_a1_valuations(p)) d[py::int_(c.alpha)] = c.valuation;
    return d;
  }, py::arg("p"));

  m.def("vp_monster_order", &vp_monster_order, py::arg("p"));
  m.def("thm11_rhs", [](std::int64_t p, std::int64_t window) {
    const Thm11Terms t = thm11_rhs(p, window);
    return py::make_tuple(valuation(t.term_plus), valuation(t.term_p), valuation(t.term_p2), t.total);
  }, py::arg("p"), py::arg("window") = 60);
  m.def("thm12_rhs", &thm12_rhs, py::arg("p"));
  m.def("verify_prime", [](std::int64_t p, std::int64_t window, std::int64_t K) {
    VerifyConfig config;
    config.window = window;
    config.K = K;
    return report_dict(verify_prime(p, config));
  }, py::arg("p"), py::arg("window") = 60, py::arg("K") = 4);

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
