// Command-line front end: compute, groebner, divide, member, verify, gap.

#include <CLI11.hpp>

#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "mrees/division.hpp"
#include "mrees/error.hpp"
#include "mrees/groebner.hpp"
#include "mrees/io.hpp"
#include "mrees/rees.hpp"
#include "mrees/verify.hpp"

namespace {

using namespace mrees;
using io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  std::string h_mode = "generalized";
  std::string order;
  std::size_t budget = 1'000'000;
  std::string format = "json";
};

ReesOptions rees_options(const Globals& g) {
  ReesOptions o;
  o.h_mode = g.h_mode == "paper" ? HMode::EqualityOnly : HMode::Generalized;
  o.groebner.pair_budget = g.budget;
  return o;
}

GroebnerOptions gb_options(const Globals& g) {
  GroebnerOptions o;
  o.pair_budget = g.budget;
  return o;
}

void require_order(const Globals& g, const std::string& wanted, const char* cmd) {
  if (!g.order.empty() && g.order != wanted)
    throw InputError(std::string(cmd) + " supports --order " + wanted + " only");
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// T-variables first, then the rest, each in order of first appearance.
std::vector<std::string> infer_vars(const std::vector<std::string>& texts) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::vector<std::string> ts, xs;
  std::set<std::string> seen;
  for (const auto& t : texts)
    for (auto it = std::sregex_iterator(t.begin(), t.end(), ident); it != std::sregex_iterator(); ++it) {
      std::string name = it->str();
      if (!seen.insert(name).second) continue;
      (classify_variable(name).kind == VarKind::T ? ts : xs).push_back(name);
    }
  ts.insert(ts.end(), xs.begin(), xs.end());
  return ts;
}

int cmd_compute(const Globals& g, const std::string& input, bool intermediates, bool timings) {
  ReesProblem problem = io::load_problem(io::read_json_file(input));
  ReesResult result = rees_equations(problem, rees_options(g));
  emit(g, io::result_to_json(problem, result, intermediates, timings),
       io::result_to_text(problem, result, intermediates));
  if (!result.kernel_ok) {
    std::cerr << "kernel check failed: an output generator has nonzero image\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_groebner(const Globals& g, const std::string& input, const std::string& elim) {
  require_order(g, "full-lex", "groebner");
  io::IdealSpec spec = io::load_ideal(io::read_json_file(input));
  GroebnerBasis gb = buchberger(spec.gens, gb_options(g));
  if (!elim.empty()) gb = eliminate(gb, split_commas(elim));
  Json j;
  j["vars"] = gb.basis.empty() ? spec.ring->vars.names() : gb.basis.front().vars().names();
  j["basis"] = io::render_all(gb.basis);
  j["certified"] = gb.certified;
  std::string text;
  for (const auto& b : gb.basis) text += render(b) + "\n";
  emit(g, j, text);
  return gb.certified ? kOk : kVerifyFailed;
}

int cmd_divide(const Globals& g, const std::string& f_text, const std::string& F_text,
               const std::string& regime, const std::string& modulus, const std::string& vars) {
  require_order(g, "t-lex", "divide");
  Int n;
  if (n.set_str(modulus, 10) != 0) throw InputError("bad modulus " + modulus);
  RingSpec ring = RingSpec::from_modulus(n);
  auto divisor_texts = split_commas(F_text);
  std::vector<std::string> all = divisor_texts;
  all.push_back(f_text);
  auto names = vars.empty() ? infer_vars(all) : split_commas(vars);
  auto R = make_poly_ring(ring, VariableSet::from_names(names));
  Polynomial f = parse_polynomial(f_text, R);
  std::vector<Polynomial> F;
  for (const auto& t : divisor_texts) F.push_back(parse_polynomial(t, R));

  if (regime != "pid" && regime != "ppq") throw InputError("unknown regime " + regime);
  DivisionResult d = regime == "pid" ? pseudo_divide_pid(f, F) : pseudo_divide_ppq(f, F);

  Json j;
  j["vars"] = names;
  j["a"] = render(d.multiplier);
  j["g"] = io::render_all(d.cofactors);
  j["s"] = render(d.remainder);
  std::ostringstream text;
  text << "a = " << render(d.multiplier) << "\n";
  for (std::size_t i = 0; i < d.cofactors.size(); ++i)
    text << "g" << i + 1 << " = " << render(d.cofactors[i]) << "\n";
  text << "s = " << render(d.remainder) << "\n";
  emit(g, j, text.str());
  return kOk;
}

int cmd_member(const Globals& g, const std::string& f_text, const std::string& input) {
  Json j = io::read_json_file(input);
  bool in = false;
  if (j.is_object() && j.contains("x_vars")) {
    ReesProblem problem = io::load_problem(j);
    ReesResult result = rees_equations(problem, rees_options(g));
    Polynomial f = parse_polynomial(f_text, problem.ring_without_y());
    in = member(f, buchberger(result.basis, gb_options(g))).member;
  } else {
    io::IdealSpec spec = io::load_ideal(j);
    Polynomial f = parse_polynomial(f_text, spec.ring);
    in = member(f, buchberger(spec.gens, gb_options(g))).member;
  }
  std::cout << (in ? "true" : "false") << "\n";
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& input, const std::string& gens_path) {
  ReesProblem problem = io::load_problem(io::read_json_file(input));
  auto gens = io::load_gens(io::read_json_file(gens_path), problem.ring_without_y());
  KernelReport report = kernel_check(gens, problem);
  Json j;
  j["pass"] = report.pass;
  j["images"] = io::render_all(report.images);
  std::ostringstream text;
  for (std::size_t i = 0; i < gens.size(); ++i)
    text << render(gens[i]) << " -> " << render(report.images[i]) << "\n";
  text << (report.pass ? "pass" : "fail") << "\n";
  emit(g, j, text.str());
  return report.pass ? kOk : kVerifyFailed;
}

int cmd_gap(const Globals& g, const std::string& input, const std::string& phi_path,
            const std::vector<std::string>& probe_texts) {
  ReesProblem problem = io::load_problem(io::read_json_file(input));
  io::MatrixSpec phi = io::load_matrix(io::read_json_file(phi_path), problem);
  std::vector<Polynomial> probes;
  for (const auto& p : probe_texts) probes.push_back(parse_polynomial(p, problem.ring_without_y()));
  GapReport report = saturation_gap_report(problem, phi.matrix, probes, phi.rows, rees_options(g));

  Json j;
  j["matrix_ideal"] = io::render_all(report.matrix_gens);
  j["probes"] = Json::array();
  std::ostringstream text;
  text << "matrix ideal:\n";
  for (const auto& m : report.matrix_gens) text << "  " << render(m) << "\n";
  for (const auto& p : report.probes) {
    j["probes"].push_back(
        {{"probe", render(p.probe)}, {"in_L", p.in_kernel}, {"in_matrix_ideal", p.in_matrix_ideal}});
    text << render(p.probe) << ": in L " << (p.in_kernel ? "true" : "false") << ", in matrix ideal "
         << (p.in_matrix_ideal ? "true" : "false") << "\n";
  }
  if (report.saturation_matches) {
    j["saturation_matches"] = *report.saturation_matches;
    text << "saturated matrix ideal equals L: " << (*report.saturation_matches ? "true" : "false") << "\n";
  } else {
    j["saturation_matches"] = nullptr;
  }
  emit(g, j, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining equations of multi-Rees algebras over Z and Z/NZ"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--h-mode", g.h_mode, "H set variant")
      ->check(CLI::IsMember({"generalized", "paper"}));
  app.add_option("--order", g.order, "monomial order")->check(CLI::IsMember({"full-lex", "t-lex"}));
  app.add_option("--budget", g.budget, "critical-pair budget");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  std::string input, elim, f_text, F_text, regime = "ppq", modulus = "0", vars, gens_path, phi_path;
  bool intermediates = false, timings = false;
  std::vector<std::string> probes;

  auto* compute = app.add_subcommand("compute", "defining equations of a Rees problem");
  compute->add_option("-i,--input", input, "problem JSON")->required();
  compute->add_flag("--emit-intermediates", intermediates, "include Koszul relations, F and stats");
  compute->add_flag("--timings", timings, "include wall-clock timings");

  auto* groebner = app.add_subcommand("groebner", "strong Groebner basis under lex");
  groebner->add_option("-i,--input", input, "ideal JSON")->required();
  groebner->add_option("--eliminate", elim, "leading variables to eliminate, comma-separated");

  auto* divide = app.add_subcommand("divide", "pseudo-division under the T-only order");
  divide->add_option("-f", f_text, "dividend")->required();
  divide->add_option("-F", F_text, "divisors, comma-separated")->required();
  divide->add_option("--regime", regime, "pid or ppq")->check(CLI::IsMember({"pid", "ppq"}));
  divide->add_option("--modulus", modulus, "N, or 0 for Z");
  divide->add_option("--vars", vars, "variable order, comma-separated");

  auto* mem = app.add_subcommand("member", "ideal membership");
  mem->add_option("-f", f_text, "polynomial")->required();
  mem->add_option("-i,--input", input, "ideal or problem JSON")->required();

  auto* verify = app.add_subcommand("verify", "phi-images of candidate generators");
  verify->add_option("-i,--input", input, "problem JSON")->required();
  verify->add_option("-g,--gens", gens_path, "generators JSON")->required();

  auto* gap = app.add_subcommand("gap", "compare the kernel with a presentation-matrix ideal");
  gap->add_option("-i,--input", input, "problem JSON")->required();
  gap->add_option("--phi", phi_path, "matrix JSON")->required();
  gap->add_option("--probe", probes, "probe polynomial (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(g, input, intermediates, timings);
    if (groebner->parsed()) return cmd_groebner(g, input, elim);
    if (divide->parsed()) return cmd_divide(g, f_text, F_text, regime, modulus, vars);
    if (mem->parsed()) return cmd_member(g, f_text, input);
    if (verify->parsed()) return cmd_verify(g, input, gens_path);
    if (gap->parsed()) return cmd_gap(g, input, phi_path, probes);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << " (basis " << e.basis_size() << ", pending pairs "
              << e.pending_pairs() << ")\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
