#pragma once

#include "toric/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// One summand exp(<eta, beta> + alpha) q^level of the bulk-deformed potential at a point.
struct PotentialTerm {
  IVec eta;
  Rat kappa;
  Rat level;
  int facet = -1;  // polygon half-space index, -1 for an added ghost
  bool ghost = false;
};

struct PotentialPresentation {
  Pt point;
  std::vector<HalfSpace> ghosts;  // added ghosts, in term order after the polygon's own terms
  std::vector<PotentialTerm> terms;
};

// Terms: closed non-ghost facets, the polygon's own closed ghost half-spaces, then `ghosts`.
// Open facets contribute no term (see README).
PotentialPresentation make_presentation(const Polygon& p, const Pt& x, const std::vector<HalfSpace>& ghosts);

// c q^order
struct Monomial {
  Rat coeff;
  Rat order;
};

enum class QwKind { UnitPointSolved, GeometricCandidate };
std::string qw_kind_name(QwKind k);

struct QwCertificate {
  QwKind kind = QwKind::GeometricCandidate;
  PotentialPresentation presentation;
  Rat s;                    // minimal level
  std::vector<int> tied;    // terms at level s
  // UNIT_POINT_SOLVED: exp(alpha_i) per term as a finite q-series; leading coefficient is
  // unit_solution[i], the rest are positive-order corrections.
  std::vector<int> pivots;
  std::vector<std::vector<Monomial>> exp_alpha;
  std::vector<Rat> unit_solution;
  // GEOMETRIC_CANDIDATE profile
  std::vector<int> e1, e2;
  bool heuristic = false;  // geometric test run outside its smooth closed hypothesis
};

std::optional<QwCertificate> geometric_nondisp_test(const Polygon& p, const Pt& x);

// ghost is nonnegative on the closure and vanishes at most on a vertex or an open edge
bool is_valid_ghost(const Polygon& p, const HalfSpace& g);

// Primitive conormals of height <= H with kappa chosen so the ghost ties with a closed facet
// at x (minimal level first, then the higher levels in increasing order). Only valid ghosts
// that are not already terms are returned.
std::vector<HalfSpace> enumerate_ghosts(const Polygon& p, const Pt& x, Int H);

// Critical point at y = (1,1): two pivot terms absorb the equations, every other exp(alpha) is 1.
std::optional<QwCertificate> solve_leading_order(const PotentialPresentation& pres);

struct QwOptions {
  Int ghost_height = 4;
  int max_subset = 2;
};

// True when only the geometric test applies (smooth, compact, no open facets).
bool geometric_only(const Polygon& p);

std::optional<QwCertificate> certify_nondisplaceable(const Polygon& p, const Pt& x, const QwOptions& opt = {});

// Unit-point search over ghost subsets regardless of the smooth-compact policy.
std::optional<QwCertificate> search_unit_point(const Polygon& p, const Pt& x, const QwOptions& opt = {});

// {lower * x2 <= x1 <= upper * x2}
struct SectorRegion {
  Rat lower, upper;
  bool contains(const Pt& x) const { return lower * x.y <= x.x && x.x <= upper * x.y; }
};
SectorRegion sector_nondisp_region(Int n, Int m);

// Exact recheck: terms rebuilt from the polygon, ghosts valid, exp(alpha) units, and both
// critical equations vanish identically in q.
bool verify_qw(const Polygon& p, const QwCertificate& c, std::string* why = nullptr);

}  // namespace toric
