#pragma once

#include "toric/polygon.hpp"

#include <array>
#include <string>
#include <vector>

namespace toric {

// n/m = 1/(E1 - 1/(E2 - ... 1/Ek))
struct ContinuedFraction {
  Int n = 0, m = 0;
  std::vector<Int> terms;
  std::vector<Int> remainders;  // r_{-1}, r_0, ..., r_k
};

ContinuedFraction hj_expand(Int n, Int m);
Rat hj_evaluate(const std::vector<Int>& terms);
std::vector<IVec> conormal_chain(const ContinuedFraction& cf);

struct SectorDuality {
  Int n = 0, m = 0, n_tilde = 0, q = 0;
  std::array<std::array<Int, 2>, 2> S{};
};
SectorDuality dual_pair(Int n, Int m);

// Scenario polygons. Support-constant windows are validated; violations throw DomainError
// naming the failed condition.
Polygon cp2(const Rat& size = 6);
Polygon sector(Int n, Int m);
Polygon sector_open(Int n, Int m, const Rat& kappa);
Polygon hirzebruch(Int m, const Rat& kappa);
Polygon resolve_sector(Int n, Int m, const std::vector<Rat>& kappa);
Polygon weighted_projective(Int p, Int q);
Polygon p135_resolved_at_30(const Rat& k6, const Rat& k7);
Polygon p135_full_resolution(const Rat& k4, const Rat& k5, const Rat& k6, const Rat& k7);
Polygon finite_volume_a2(const Rat& k1, const Rat& k2);

struct ScenarioInfo {
  std::string name;
  std::string params;  // parameter synopsis with defaults
};
std::vector<ScenarioInfo> scenario_list();

// Builds a named scenario from string parameters; empty params use the defaults.
Polygon make_scenario(const std::string& name, const std::vector<std::string>& params);

}  // namespace toric
