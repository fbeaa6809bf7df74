#pragma once

// JSON file formats.
//   problem: {"ring": {"modulus": N}, "x_vars": [...], "ideals": [[...], ...]}
//   ideal:   {"ring": {"modulus": N}, "vars": [...], "gens": [...]}
//   gens:    {"gens": [...]}   (over the problem's T/x ring)
//   matrix:  {"rows": [...]?, "matrix": [[...], ...]}   (entries over R[x])

#include <json.hpp>

#include <string>
#include <vector>

#include "mrees/rees.hpp"
#include "mrees/verify.hpp"

namespace mrees::io {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

RingSpec load_ring(const Json& j);
ReesProblem load_problem(const Json& j);

struct IdealSpec {
  PolyRingPtr ring;
  std::vector<Polynomial> gens;
};
IdealSpec load_ideal(const Json& j);

std::vector<Polynomial> load_gens(const Json& j, const PolyRingPtr& ring);

struct MatrixSpec {
  std::vector<std::string> rows;  // empty selects the default row order
  PolyMatrix matrix;
};
MatrixSpec load_matrix(const Json& j, const ReesProblem& problem);

std::vector<std::string> render_all(const std::vector<Polynomial>& fs);

Json result_to_json(const ReesProblem& problem, const ReesResult& result, bool intermediates,
                    bool timings);
std::string result_to_text(const ReesProblem& problem, const ReesResult& result, bool intermediates);

}  // namespace mrees::io
