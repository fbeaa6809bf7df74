// Python module _mrees. Structured data crosses the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrees/division.hpp"
#include "mrees/error.hpp"
#include "mrees/groebner.hpp"
#include "mrees/io.hpp"
#include "mrees/rees.hpp"
#include "mrees/verify.hpp"

namespace py = pybind11;
using namespace mrees;
using io::Json;

namespace {

ReesOptions options(const std::string& h_mode, std::size_t budget) {
  ReesOptions o;
  if (h_mode == "paper")
    o.h_mode = HMode::EqualityOnly;
  else if (h_mode != "generalized")
    throw InputError("h_mode must be 'generalized' or 'paper'");
  o.groebner.pair_budget = budget;
  return o;
}

std::string compute(const std::string& problem_json, const std::string& h_mode, std::size_t budget,
                    bool intermediates) {
  ReesProblem problem = io::load_problem(Json::parse(problem_json));
  ReesResult result = rees_equations(problem, options(h_mode, budget));
  return io::result_to_json(problem, result, intermediates, false).dump();
}

std::string groebner(const std::string& ideal_json, const std::vector<std::string>& drop, std::size_t budget) {
  io::IdealSpec spec = io::load_ideal(Json::parse(ideal_json));
  GroebnerOptions o;
  o.pair_budget = budget;
  GroebnerBasis gb = buchberger(spec.gens, o);
  if (!drop.empty()) gb = eliminate(gb, drop);
  return Json{{"basis", io::render_all(gb.basis)}, {"certified", gb.certified}}.dump();
}

bool is_member(const std::string& f, const std::string& ideal_json) {
  io::IdealSpec spec = io::load_ideal(Json::parse(ideal_json));
  return member(parse_polynomial(f, spec.ring), buchberger(spec.gens)).member;
}

std::string divide(const std::string& f_text, const std::vector<std::string>& F_text,
                   const std::vector<std::string>& vars, const std::string& modulus, const std::string& regime) {
  Int n;
  if (n.set_str(modulus, 10) != 0) throw InputError("bad modulus " + modulus);
  auto R = make_poly_ring(RingSpec::from_modulus(n), VariableSet::from_names(vars));
  Polynomial f = parse_polynomial(f_text, R);
  std::vector<Polynomial> F;
  for (const auto& t : F_text) F.push_back(parse_polynomial(t, R));
  if (regime != "pid" && regime != "ppq") throw InputError("regime must be 'pid' or 'ppq'");
  DivisionResult d = regime == "pid" ? pseudo_divide_pid(f, F) : pseudo_divide_ppq(f, F);
  return Json{{"a", render(d.multiplier)}, {"g", io::render_all(d.cofactors)}, {"s", render(d.remainder)}}.dump();
}

py::tuple nonzerodivisor(const std::string& f, const std::vector<std::string>& vars, const std::string& modulus) {
  Int n;
  if (n.set_str(modulus, 10) != 0) throw InputError("bad modulus " + modulus);
  auto R = make_poly_ring(RingSpec::from_modulus(n), VariableSet::from_names(vars));
  ZeroDivisorTest t = is_nonzerodivisor(parse_polynomial(f, R));
  py::object witness = t.witness ? py::int_(py::str(t.witness->get_str())) : py::object(py::none());
  return py::make_tuple(t.nonzerodivisor, witness);
}

}  // namespace

PYBIND11_MODULE(_mrees, m) {
  m.doc() = "Defining equations of multi-Rees algebras over Z and Z/NZ";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("compute", &compute, py::arg("problem_json"), py::arg("h_mode") = "generalized",
        py::arg("budget") = 1'000'000, py::arg("intermediates") = false);
  m.def("groebner", &groebner, py::arg("ideal_json"), py::arg("eliminate") = std::vector<std::string>{},
        py::arg("budget") = 1'000'000);
  m.def("member", &is_member, py::arg("f"), py::arg("ideal_json"));
  m.def("divide", &divide, py::arg("f"), py::arg("F"), py::arg("vars"), py::arg("modulus") = "0",
        py::arg("regime") = "ppq");
  m.def("is_nonzerodivisor", &nonzerodivisor, py::arg("f"), py::arg("vars"), py::arg("modulus"));
}
