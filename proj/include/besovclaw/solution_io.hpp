#pragma once

#include <string>

#include "besovclaw/solver.hpp"

namespace besovclaw {

// Solution JSON schema:
//   {schema_version, grid{t0,t1,x0,x1,nt,nx}, flux, scheme, cfl, boundary,
//    init, supnorm, values (row-major nt*nx), initial_values}
// Values serialize as shortest round-trip decimals, so a write/read cycle is
// bit-exact. Readers reject unknown schema majors.
std::string solution_to_json(const SolutionRecord& rec);
SolutionRecord solution_from_json(const std::string& text);

void write_solution(const SolutionRecord& rec, const std::string& path);
SolutionRecord read_solution(const std::string& path);

}  // namespace besovclaw
