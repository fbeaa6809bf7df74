#include "mrees/io.hpp"

#include <fstream>
#include <sstream>

#include "mrees/error.hpp"

namespace mrees::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Polynomial parse_entry(const Json& e, const PolyRingPtr& ring) {
  if (e.is_string()) return parse_polynomial(e.get<std::string>(), ring);
  if (e.is_number_integer()) return Polynomial::constant(ring, Int(e.dump()));
  throw InputError("polynomial entries must be strings or integers");
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

RingSpec load_ring(const Json& j) {
  const Json& m = field(field(j, "ring"), "modulus");
  if (m.is_number_integer()) return RingSpec::from_modulus(Int(m.dump()));
  if (m.is_string()) {
    Int n;
    if (n.set_str(m.get<std::string>(), 10) != 0) throw InputError("bad modulus");
    return RingSpec::from_modulus(n);
  }
  throw InputError("modulus must be an integer");
}

ReesProblem load_problem(const Json& j) {
  RingSpec ring = load_ring(j);
  auto x_vars = string_list(field(j, "x_vars"), "x_vars");
  const Json& ideals = field(j, "ideals");
  if (!ideals.is_array()) throw InputError("ideals must be an array");
  std::vector<std::vector<std::string>> gens;
  for (const auto& ideal : ideals) gens.push_back(string_list(ideal, "ideal"));
  return ReesProblem(std::move(ring), std::move(x_vars), gens);
}

IdealSpec load_ideal(const Json& j) {
  RingSpec ring = load_ring(j);
  auto names = string_list(field(j, "vars"), "vars");
  IdealSpec spec{make_poly_ring(ring, VariableSet::from_names(names)), {}};
  spec.gens = load_gens(j, spec.ring);
  return spec;
}

std::vector<Polynomial> load_gens(const Json& j, const PolyRingPtr& ring) {
  const Json& g = field(j, "gens");
  if (!g.is_array()) throw InputError("gens must be an array");
  std::vector<Polynomial> out;
  for (const auto& e : g) out.push_back(parse_entry(e, ring));
  return out;
}

MatrixSpec load_matrix(const Json& j, const ReesProblem& problem) {
  MatrixSpec spec;
  if (j.is_object() && j.contains("rows")) spec.rows = string_list(j["rows"], "rows");
  const Json& m = field(j, "matrix");
  if (!m.is_array()) throw InputError("matrix must be an array of rows");
  for (const auto& row : m) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(parse_entry(e, problem.x_ring()));
    spec.matrix.push_back(std::move(r));
  }
  return spec;
}

std::vector<std::string> render_all(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(render(f));
  return out;
}

Json result_to_json(const ReesProblem& problem, const ReesResult& result, bool intermediates,
                    bool timings) {
  Json out;
  out["ring"] = problem.ring().describe();
  out["basis"] = render_all(result.basis);
  out["certified"] = result.certified;
  out["kernel_ok"] = result.kernel_ok;
  out["pivots"] = Json::array();
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    unsigned k = problem.pivot(j);
    out["pivots"].push_back(k == 0 ? Json(nullptr) : Json(t_variable_name(k, j)));
  }
  out["h_set"] = render_all(result.h_set);
  out["multiplier"] = result.multiplier ? Json(render(*result.multiplier)) : Json(nullptr);
  out["components"] = Json::array();
  for (const auto& c : result.components) {
    Json comp;
    comp["ring"] = c.ring.describe();
    comp["idempotent"] = c.idempotent.get_str();
    comp["basis"] = render_all(c.basis);
    out["components"].push_back(std::move(comp));
  }
  if (intermediates) {
    out["koszul"] = render_all(result.koszul);
    out["F"] = render_all(result.F);
    out["stats"] = {{"pairs", result.stats.pairs},
                    {"spolys", result.stats.spolys},
                    {"gpolys", result.stats.gpolys},
                    {"apolys", result.stats.apolys},
                    {"zero_reductions", result.stats.zero_reductions},
                    {"max_basis", result.stats.max_basis}};
  }
  if (timings) out["timings_ms"] = result.timings_ms;
  return out;
}

std::string result_to_text(const ReesProblem& problem, const ReesResult& result, bool intermediates) {
  std::ostringstream os;
  os << "ring " << problem.ring().describe() << "\n";
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    unsigned k = problem.pivot(j);
    os << "pivot I_" << j << ": " << (k == 0 ? std::string("none") : t_variable_name(k, j)) << "\n";
  }
  if (result.multiplier) os << "multiplier: " << render(*result.multiplier) << "\n";
  for (const auto& h : result.h_set) os << "H: " << render(h) << "\n";
  if (intermediates) {
    for (const auto& k : result.koszul) os << "koszul: " << render(k) << "\n";
    for (const auto& f : result.F) os << "F: " << render(f) << "\n";
  }
  for (const auto& c : result.components) {
    os << "component " << c.ring.describe() << " (e = " << c.idempotent.get_str() << ")\n";
    for (const auto& g : c.basis) os << "  " << render(g) << "\n";
  }
  os << "basis (" << result.basis.size() << "):\n";
  for (const auto& g : result.basis) os << "  " << render(g) << "\n";
  return os.str();
}

}  // namespace mrees::io
