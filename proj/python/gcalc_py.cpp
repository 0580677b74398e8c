#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcalc/charts.hpp"
#include "gcalc/checks.hpp"
#include "gcalc/cli.hpp"
#include "gcalc/error.hpp"
#include "gcalc/expr.hpp"
#include "gcalc/ga.hpp"

namespace py = pybind11;
using namespace gcalc;

namespace {

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

SqMat<double> to_mat(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  SqMat<double> m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw DimMismatch("matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> from_mat(const SqMat<double>& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i].push_back(m(i, j));
  return rows;
}

Multivector from_dict(int n, const std::map<std::string, double>& coeffs) {
  if (n < 0 || n > kMaxAlgebraDim) throw DimMismatch("dimension out of range");
  Multivector a(n);
  for (const auto& [k, v] : coeffs) a.c[parse_blade_key(k, n)] = v;
  return a;
}

std::map<std::string, double> to_dict(const Multivector& a) {
  std::map<std::string, double> out;
  for (Mask m = 0; m < a.size(); ++m)
    if (a.c[m] != 0.0) out[blade_key(m)] = a.c[m];
  return out;
}

Chart chart_arg(const std::string& chart, const std::string& manifest) { return cli::load_chart(chart, manifest); }

std::string point_text(const py::dict& point) {
  std::string s;
  for (const auto& [k, v] : point) s += (s.empty() ? "" : ",") + py::str(k).cast<std::string>() + "=" + py::str(v).cast<std::string>();
  return s;
}

}  // namespace

PYBIND11_MODULE(_gcalc, m) {
  m.doc() = "Geometric calculus on charts";
  static py::exception<Error> exc(m, "GcalcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<Gram>(m, "Gram")
      .def(py::init([](const std::vector<std::vector<double>>& g) { return Gram(to_mat(g)); }))
      .def_static("identity", &Gram::identity)
      .def_static("diagonal", &Gram::diagonal)
      .def_property_readonly("dim", &Gram::dim)
      .def_property_readonly("matrix", [](const Gram& g) { return from_mat(g.g()); })
      .def_property_readonly("det", &Gram::det);

  py::class_<Multivector>(m, "Multivector")
      .def(py::init(&from_dict), py::arg("n"), py::arg("coeffs") = std::map<std::string, double>{})
      .def_static("vector", [](const std::vector<double>& v) {
        return Multivector::vector(static_cast<int>(v.size()), v);
      })
      .def_readonly("n", &Multivector::n)
      .def("to_dict", &to_dict)
      .def("__getitem__", [](const Multivector& a, const std::string& k) { return a.c[parse_blade_key(k, a.n)]; })
      .def("__add__", [](const Multivector& a, const Multivector& b) { return a + b; })
      .def("__sub__", [](const Multivector& a, const Multivector& b) { return a - b; })
      .def("__neg__", [](const Multivector& a) { return -a; })
      .def("__mul__", [](const Multivector& a, double s) { return s * a; })
      .def("__rmul__", [](const Multivector& a, double s) { return s * a; })
      .def("__repr__", [](const Multivector& a) {
        std::string s;
        for (const auto& [k, v] : to_dict(a)) s += (s.empty() ? "" : ", ") + ("'" + k + "': ") + py::repr(py::float_(v)).cast<std::string>();
        return "Multivector(" + std::to_string(a.n) + ", {" + s + "})";
      });

  m.def("gp", py::overload_cast<const Multivector&, const Multivector&, const Gram&>(&gcalc::gp));
  m.def("dot", py::overload_cast<const Multivector&, const Multivector&, const Gram&>(&gcalc::dot));
  m.def("wedge", [](const Multivector& a, const Multivector& b) { return gcalc::wedge(a, b); });
  m.def("grade", [](const Multivector& a, int k) { return gcalc::grade(a, k); });
  m.def("reverse", [](const Multivector& a) { return gcalc::reverse(a); });
  m.def("dual", py::overload_cast<const Multivector&, const Gram&, int>(&gcalc::dual), py::arg("a"), py::arg("g"),
        py::arg("orientation") = 1);
  m.def("pseudoscalar", &gcalc::pseudoscalar, py::arg("g"), py::arg("orientation") = 1);
  m.def("reciprocal_frame", [](const std::vector<std::vector<double>>& f, const Gram& g) {
    return from_mat(reciprocal_frame(to_mat(f), g));
  });
  m.def("trace_rot", [](const std::vector<std::vector<double>>& f, const Gram& g) {
    const TraceRot r = trace_rot(LinMap{to_mat(f)}, g);
    return py::make_tuple(r.trace, r.rot);
  });

  m.def("parse", [](const std::string& text, const std::vector<std::string>& coords) {
    return expr::to_string(expr::parse(text, coords), coords);
  });
  m.def("jet", [](const std::string& text, const std::vector<std::string>& coords, const std::vector<double>& point) {
    if (point.size() != coords.size()) throw DimMismatch("point needs one value per coordinate");
    const expr::Jet2 j = expr::eval_jet2(expr::parse(text, coords), point);
    std::vector<std::vector<double>> h(j.dim());
    for (std::size_t k = 0; k < j.dim(); ++k)
      for (std::size_t l = 0; l < j.dim(); ++l) h[k].push_back(j.h(k, l));
    return py::make_tuple(j.value, j.grad, h);
  });

  m.def("charts", &builtin_chart_names);
  m.def(
      "eval",
      [](const std::string& op, const std::string& field, const py::dict& point, const std::string& chart,
         const std::string& manifest, const std::string& frame, const std::map<int, double>& dir, bool levi_civita) {
        cli::EvalArgs a;
        a.op = op;
        a.field = field;
        a.frame = frame;
        for (const auto& [i, v] : dir) a.dir += (a.dir.empty() ? "" : ",") + std::to_string(i) + "=" + py::repr(py::float_(v)).cast<std::string>();
        a.point = point_text(point);
        a.levi_civita = levi_civita;
        return loads(cli::cmd_eval(chart_arg(chart, manifest), a));
      },
      py::arg("op"), py::arg("field"), py::arg("point"), py::arg("chart") = "", py::arg("manifest") = "",
      py::arg("frame") = "", py::arg("dir") = std::map<int, double>{}, py::arg("levi_civita") = false);
  m.def(
      "connection",
      [](const py::dict& point, const std::string& chart, const std::string& manifest, const std::string& frame,
         bool mixed) { return loads(cli::cmd_connection(chart_arg(chart, manifest), frame, point_text(point), mixed)); },
      py::arg("point"), py::arg("chart") = "", py::arg("manifest") = "", py::arg("frame") = "coord",
      py::arg("mixed") = false);
  m.def(
      "maxwell",
      [](const std::map<std::string, std::string>& potential, const py::dict& point) {
        std::string p;
        for (const auto& [k, v] : potential) p += (p.empty() ? "" : ",") + k + ":" + v;
        return loads(cli::cmd_maxwell(p, point_text(point)));
      },
      py::arg("potential"), py::arg("point"));
  m.def(
      "check",
      [](const std::string& suite, int samples, std::uint64_t seed, std::optional<double> tol,
         const std::string& manifest) {
        CheckOptions o;
        o.suite = suite;
        o.samples = samples;
        o.seed = seed;
        o.tol = tol;
        if (!manifest.empty()) o.manifest = load_manifest_file(manifest);
        Report r;
        {
          py::gil_scoped_release release;
          r = run_checks(o);
        }
        return loads(r.to_json());
      },
      py::arg("suite") = "all", py::arg("samples") = 64, py::arg("seed") = 42, py::arg("tol") = py::none(),
      py::arg("manifest") = "");
}
