#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "fraclog/cli.hpp"
#include "fraclog/epidemic.hpp"
#include "fraclog/error.hpp"
#include "fraclog/fractional.hpp"
#include "fraclog/logistic.hpp"
#include "fraclog/mlcore.hpp"
#include "fraclog/mllog.hpp"

namespace py = pybind11;
using namespace fraclog;

namespace {

SeriesControl control(double tol, int max_terms, double z_max, double z_min, double z_switch) {
  SeriesControl c;
  c.tol = tol;
  c.max_terms = max_terms;
  c.z_max = z_max;
  c.z_min = z_min;
  c.z_switch = z_switch;
  return c;
}

py::dict ml_value_dict(const MLValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["est_error"] = v.est_error;
  d["terms_used"] = v.terms_used;
  d["degraded"] = v.precision_flag == Precision::degraded;
  d["route"] = std::string(to_string(v.route));
  return d;
}

}  // namespace

PYBIND11_MODULE(fraclog, m) {
  m.doc() = "Mittag-Leffler functions, base-E_alpha(1) logarithms and fractional logistic / SI / SIS solutions";
  m.attr("__version__") = FRACLOG_VERSION;

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::reinterpret_borrow<py::object>(exc.ptr());
      py::object inst = cls(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  const SeriesControl d{};

  m.def("gamma", &gamma_fn, py::arg("x"), "Gamma function; raises on poles and overflow.");

  m.def(
      "ml_eval",
      [](double alpha, double z, double beta, double tol, int max_terms, double z_max, double z_min,
         double z_switch) {
        return ml_eval(MLParams{alpha, beta}, z, control(tol, max_terms, z_max, z_min, z_switch)).value;
      },
      py::arg("alpha"), py::arg("z"), py::arg("beta") = 1.0, py::arg("tol") = d.tol,
      py::arg("max_terms") = d.max_terms, py::arg("z_max") = d.z_max, py::arg("z_min") = d.z_min,
      py::arg("z_switch") = d.z_switch, "E_{alpha,beta}(z).");

  m.def(
      "ml_eval_detail",
      [](double alpha, double z, double beta) { return ml_value_dict(ml_eval(MLParams{alpha, beta}, z)); },
      py::arg("alpha"), py::arg("z"), py::arg("beta") = 1.0,
      "E_{alpha,beta}(z) with error estimate, term count, precision flag and route.");

  m.def(
      "ml_deriv", [](double alpha, double z, double beta) { return ml_deriv(MLParams{alpha, beta}, z).value; },
      py::arg("alpha"), py::arg("z"), py::arg("beta") = 1.0, "d/dz E_{alpha,beta}(z).");

  m.def(
      "ml_log", [](double alpha, double x) { return ml_log(make_log_context(alpha), x); }, py::arg("alpha"),
      py::arg("x"), "ln(x) / ln(E_alpha(1)).");

  m.def(
      "ml_inverse",
      [](double alpha, double y) {
        const InverseResult r = ml_inverse(alpha, y);
        py::dict out;
        out["x"] = r.x;
        out["iterations"] = r.iterations;
        out["residual"] = r.residual;
        return out;
      },
      py::arg("alpha"), py::arg("y"), "x with E_alpha(x) = y.");

  m.def(
      "verify_proposition",
      [](double alpha, double x1, double x2) {
        const PropositionReport r = verify_proposition(alpha, x1, x2);
        py::dict out;
        out["log_product"] = r.log_product;
        out["log_quotient"] = r.log_quotient;
        out["log_x1"] = r.log_x1;
        out["log_x2"] = r.log_x2;
        out["log_sum"] = r.log_sum;
        out["log_difference"] = r.log_difference;
        out["product_gap"] = r.product_gap;
        out["quotient_gap"] = r.quotient_gap;
        return out;
      },
      py::arg("alpha"), py::arg("x1"), py::arg("x2"));

  m.def("classical_logistic", &classical_logistic, py::arg("k"), py::arg("u0"), py::arg("t"));

  m.def(
      "paper_closed_form",
      [](double alpha, double k, double u0, double t, const std::string& interp) {
        return paper_closed_form(LogisticProblem{alpha, k, u0}, parse_interpretation(interp), t);
      },
      py::arg("alpha"), py::arg("k"), py::arg("u0"), py::arg("t"), py::arg("interp") = "jumarie",
      "1 / (1 + ((1 - u0) / u0) / E_alpha(arg(t))).");

  m.def(
      "west_series",
      [](double alpha, double k, double u0, double t) { return west_series(LogisticProblem{alpha, k, u0}, t).value; },
      py::arg("alpha"), py::arg("k"), py::arg("u0"), py::arg("t"));

  m.def(
      "fabm_logistic",
      [](double alpha, double k, double u0, double t_end, int steps) {
        return fabm_solve(RhsSpec::logistic(k, true), alpha, u0, TimeGrid(t_end, steps)).values;
      },
      py::arg("alpha"), py::arg("k"), py::arg("u0"), py::arg("t_end"), py::arg("steps"),
      "FABM solution of D^alpha u = k^alpha u (1 - u) at the grid nodes.");

  m.def(
      "fabm_solve",
      [](const std::function<double(double, double)>& f, double alpha, double u0, double t_end, int steps) {
        return fabm_solve(RhsSpec::custom(f), alpha, u0, TimeGrid(t_end, steps)).values;
      },
      py::arg("f"), py::arg("alpha"), py::arg("u0"), py::arg("t_end"), py::arg("steps"),
      "FABM solution of D^alpha u = f(t, u).");

  m.def(
      "caputo_l1",
      [](const std::vector<double>& values, double t_end, double alpha) {
        if (values.size() < 3) throw Error(ErrorKind::validation, "need at least 3 samples");
        const TimeGrid grid(t_end, static_cast<int>(values.size()) - 1);
        return caputo_l1(SolutionCurve{grid, values, 0}, alpha).values;
      },
      py::arg("values"), py::arg("t_end"), py::arg("alpha"),
      "L1 Caputo derivative at t_1..t_n of samples on a uniform grid over [0, t_end].");

  m.def(
      "epidemic_closed_form",
      [](const std::string& model, double alpha, double N, double beta, double lambda, double I0, double t,
         const std::string& interp, bool alpha_exponent) {
        const EpidemicState s = closed_form(EpidemicProblem{alpha, N, beta, lambda, I0}, parse_epidemic_model(model),
                                            parse_interpretation(interp), t, EpidemicOptions{alpha_exponent, {}});
        return py::make_tuple(s.infected, s.susceptible);
      },
      py::arg("model"), py::arg("alpha"), py::arg("N"), py::arg("beta"), py::arg("lambda_"), py::arg("I0"),
      py::arg("t"), py::arg("interp") = "jumarie", py::arg("alpha_exponent") = false,
      "(I, S) from the SI or SIS closed form.");

  m.def(
      "run_command",
      [](const std::string& command, const std::map<std::string, std::string>& settings) {
        RunConfig cfg;
        for (const auto& [k, v] : settings) set_config_value(cfg, k, v);
        std::vector<std::string> out;
        for (const auto& t : run_command(command, cfg)) out.push_back(render_csv(t));
        return out;
      },
      py::arg("command"), py::arg("settings") = std::map<std::string, std::string>{},
      "Runs a CLI subcommand and returns each artifact as CSV text.");
}
