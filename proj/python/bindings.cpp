#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qeuler/bijections.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/lattice_paths.hpp"
#include "qeuler/matrix_ansatz.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/tableaux.hpp"
#include "qeuler/verify.hpp"

namespace py = pybind11;
using namespace qeuler;

namespace {

// Polynomials cross the boundary as sorted lists of (coef, y_exp, q_exp)
// with arbitrary-size Python ints.
py::list to_py(const Poly& p) {
  py::list out;
  for (const auto& t : p.terms()) {
    const std::string digits = t.coef.get_str();
    py::object coef = py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
    out.append(py::make_tuple(coef, t.y_exp, t.q_exp));
  }
  return out;
}

Poly from_py(const std::vector<std::tuple<py::int_, int, int>>& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [coef, y_exp, q_exp] : terms) {
    out.push_back(Term{Integer(py::str(static_cast<py::handle>(coef)).cast<std::string>()), y_exp, q_exp});
  }
  return Poly::from_terms(std::move(out));
}

// Runs f without the GIL and converts the result afterwards.
template <typename F>
py::list poly_call(F&& f) {
  Poly result;
  {
    py::gil_scoped_release release;
    result = f();
  }
  return to_py(result);
}

template <Poly (*F)(int)>
py::list by_index(int n) {
  return poly_call([n] { return F(n); });
}

Permutation perm_from(const std::vector<int>& images) { return Permutation(images); }

}  // namespace

PYBIND11_MODULE(_qeuler, m) {
  m.doc() = "Exact q-Euler numbers, permutation statistics and identity checks";

  static py::exception<Error> base(m, "QeulerError");
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", base.ptr());
  static py::exception<NotDivisible> not_divisible(m, "NotDivisible", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      budget(e.what());
    } catch (const NotDivisible& e) {
      not_divisible(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("poly_to_string", [](const std::vector<std::tuple<py::int_, int, int>>& t) {
    return from_py(t).to_string();
  });
  m.def("poly_normalize", [](const std::vector<std::tuple<py::int_, int, int>>& t) {
    return to_py(from_py(t));
  });
  m.def("poly_to_json", [](const std::vector<std::tuple<py::int_, int, int>>& t) {
    return to_json(from_py(t));
  });
  m.def("poly_from_json", [](const std::string& text) { return to_py(poly_from_json(text)); });

  m.def("statistics", [](const std::vector<int>& images) {
    const StatVector s = statistics(perm_from(images));
    py::dict d;
    d["wex"] = s.wex;
    d["asc"] = s.asc;
    d["cr"] = s.cr;
    d["fix"] = s.fix;
    d["p312"] = s.p312;
    return d;
  });
  m.def("gen_A", [](int n) { return poly_call([n] { return gen_A(n); }); });
  m.def("gen_B", [](int n) { return poly_call([n] { return gen_B(n); }); });
  m.def("gen_alternating_312", [](int n) { return poly_call([n] { return gen_alternating_312(n); }); });
  m.def("gen_involution_crossings",
        [](int size) { return poly_call([size] { return gen_involution_crossings(size); }); });

  m.def("tangent_closed", &by_index<tangent_closed>, "E_{2n+1}(q)");
  m.def("secant_closed", &by_index<secant_closed>, "E_{2n}(q)");
  m.def("a_n_closed", &by_index<a_n_closed>);
  m.def("b_n_closed", &by_index<b_n_closed>);
  m.def("touchard_riordan", &by_index<touchard_riordan>);
  m.def("parity_independent_e", &by_index<parity_independent_e>);
  m.def("williams_q_eulerian", [](int k, int n) { return poly_call([=] { return williams_q_eulerian(k, n); }); });
  m.def("g_sum", [](int n, int k) { return g_sum(n, k).get_si(); });

  m.def("laguerre_sum", &by_index<laguerre_sum>);
  m.def("derangement_motzkin_sum", &by_index<derangement_motzkin_sum>);
  m.def("euler_dyck_sum", [](int n, int delta) { return poly_call([=] { return euler_dyck_sum(n, delta); }); });

  m.def("gen_pt", [](int n) { return poly_call([n] { return gen_pt(n); }); });
  m.def("gen_dt", [](int n) { return poly_call([n] { return gen_dt(n); }); });

  m.def("ansatz_A", [](int n) { return poly_call([n] { return ansatz_A(n); }); });
  m.def("ansatz_B", [](int n) { return poly_call([n] { return ansatz_B(n); }); });
  m.def("ansatz_hat", [](int n) { return poly_call([n] { return ansatz_hat(n); }); });

  m.def("fv_map", [](const std::vector<int>& images) { return fv_map(perm_from(images)).path.dump(); },
        "Dump of the Laguerre history of a permutation given in one-line notation");
  m.def("tilde", [](const std::vector<int>& images) {
    const Permutation t = tilde(perm_from(images));
    return std::vector<int>(t.images().begin(), t.images().end());
  });

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite, std::optional<int> n_max, unsigned jobs) {
        VerifyOptions opts;
        opts.n_max = n_max;
        opts.jobs = jobs;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, opts);
        }
        return py::make_tuple(report.passed(), report.render());
      },
      py::arg("suite"), py::arg("n_max") = py::none(), py::arg("jobs") = 1);
}
