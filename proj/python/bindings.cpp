#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schur_ohno/error.hpp"
#include "schur_ohno/mzv.hpp"
#include "schur_ohno/ohno.hpp"
#include "schur_ohno/shapes.hpp"
#include "schur_ohno/text.hpp"

namespace py = pybind11;
using namespace schur_ohno;

namespace {

TableauIndex make_tableau(const std::vector<int>& lambda, const std::vector<std::vector<int>>& rows,
                          const std::vector<int>& mu) {
  return TableauIndex::from_rows(SkewShape(Partition(lambda), Partition(mu)), rows);
}

std::vector<int> to_vector(std::span<const int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur multiple zeta values, O-sums and Ohno functions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InadmissibleIndex>(m, "InadmissibleIndex", base.ptr());
  py::register_exception<UnsupportedShape>(m, "UnsupportedShape", base.ptr());
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base.ptr());

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("err_est", &EvalResult::err_est)
      .def_readonly("half_diff", &EvalResult::half_diff)
      .def_readonly("max_entry", &EvalResult::max_entry)
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + format_complex(r.value) + ", err_est=" + format_number(r.err_est) +
               ", max_entry=" + std::to_string(r.max_entry) + ")";
      });

  py::class_<TableauIndex>(m, "TableauIndex")
      .def(py::init(&make_tableau), py::arg("lam"), py::arg("rows"), py::arg("mu") = std::vector<int>{})
      .def_static("column", [](const std::vector<int>& k) { return TableauIndex::column(EzIndex(k)); })
      .def_property_readonly("lam", [](const TableauIndex& k) { return to_vector(k.shape().outer().parts()); })
      .def_property_readonly("mu", [](const TableauIndex& k) { return to_vector(k.shape().inner().parts()); })
      .def_property_readonly("rows", &TableauIndex::rows)
      .def("is_in_W", &is_in_W)
      .def("is_in_ID", &is_in_ID)
      .def("__eq__", [](const TableauIndex& a, const TableauIndex& b) { return a == b; })
      .def("__repr__", [](const TableauIndex& k) {
        return "TableauIndex(lam=" + format_partition(k.shape().outer()) + ", mu=" +
               format_partition(k.shape().inner()) + ", rows=\"" + format_rows(k) + "\")";
      });

  m.def("count_ssyt", [](const std::vector<int>& lambda, int max_entry, const std::vector<int>& mu) {
    return count_ssyt(SkewShape(Partition(lambda), Partition(mu)), max_entry);
  }, py::arg("lam"), py::arg("max_entry"), py::arg("mu") = std::vector<int>{});

  m.def("dual_ez", [](const std::vector<int>& k) { return to_vector(dual(EzIndex(k)).exponents()); });
  m.def("is_admissible", [](const std::vector<int>& k) { return is_admissible(EzIndex(k)); });
  m.def("dual_tableau", [](const TableauIndex& k) { return dual_tableau(k); });
  m.def("register_dual_pair", [](const TableauIndex& k, const TableauIndex& kd) { register_dual_pair(k, kd); });

  auto trunc = [](int max_entry, unsigned threads) { return TruncationConfig{max_entry, true, threads}; };

  m.def("zeta_ez", [trunc](const std::vector<int>& k, int max_entry, unsigned threads) {
    py::gil_scoped_release nogil;
    return zeta_ez(EzIndex(k), trunc(max_entry, threads));
  }, py::arg("k"), py::arg("max_entry") = 2000, py::arg("threads") = 0);

  m.def("zeta_schur", [trunc](const TableauIndex& k, int max_entry, unsigned threads) {
    py::gil_scoped_release nogil;
    return zeta_schur(k, trunc(max_entry, threads));
  }, py::arg("k"), py::arg("max_entry") = 2000, py::arg("threads") = 0);

  m.def("osum_ez", [trunc](const std::vector<int>& k, int ell, int max_entry, unsigned threads) {
    py::gil_scoped_release nogil;
    return osum_ez(EzIndex(k), ell, trunc(max_entry, threads));
  }, py::arg("k"), py::arg("ell"), py::arg("max_entry") = 2000, py::arg("threads") = 0);

  m.def("osum_schur", [trunc](const TableauIndex& k, int ell, int max_entry, unsigned threads) {
    py::gil_scoped_release nogil;
    return osum_schur(k, ell, trunc(max_entry, threads));
  }, py::arg("k"), py::arg("ell"), py::arg("max_entry") = 2000, py::arg("threads") = 0);

  m.def("ohno", [](const TableauIndex& k, std::complex<double> s, const std::string& method, int max_entry,
                   double tol, unsigned threads) {
    OhnoMethod which;
    if (method == "series") {
      which = OhnoMethod::series;
    } else if (method == "quadrature") {
      which = OhnoMethod::quadrature;
    } else {
      throw InvalidArgument("method must be 'series' or 'quadrature'");
    }
    py::gil_scoped_release nogil;
    return ohno_schur(k, s, {max_entry, tol, true, threads}, which);
  }, py::arg("k"), py::arg("s"), py::arg("method") = "series", py::arg("max_entry") = 2000,
     py::arg("tol") = 1e-10, py::arg("threads") = 0);

  m.def("beta_closed_form", &beta_closed_form, py::arg("n"), py::arg("r"), py::arg("s"));

  m.def("verify_duality", [](const TableauIndex& k, const TableauIndex& kd,
                             const std::vector<std::complex<double>>& points, int max_entry, unsigned threads) {
    DualityReport report;
    {
      py::gil_scoped_release nogil;
      report = verify_duality(k, kd, points, {max_entry, 1e-10, true, threads});
    }
    py::list rows;
    for (const auto& p : report.points) {
      py::dict row;
      row["s"] = p.s;
      row["lhs"] = p.lhs.value;
      row["rhs"] = p.rhs.value;
      row["abs_diff"] = p.abs_diff;
      row["threshold"] = p.threshold;
      row["pass"] = p.pass;
      rows.append(row);
    }
    return rows;
  }, py::arg("k"), py::arg("k_dual"), py::arg("points"), py::arg("max_entry") = 2000, py::arg("threads") = 0);
}
