#include "toric/qw.hpp"

#include "toric/resolutions.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

bool same_halfspace(const HalfSpace& a, const HalfSpace& b) { return a.eta == b.eta && a.kappa == b.kappa; }

// exp(alpha_i) for pivot i against pivot k, every other coefficient set to 1:
//   T_i = -sum_{r != i,k} det(eta_r, eta_k) / det(eta_i, eta_k) q^{l_r - l_i}
std::optional<std::vector<Monomial>> pivot_series(const std::vector<PotentialTerm>& t, size_t i, size_t k) {
  Int d = det(t[i].eta, t[k].eta);
  std::map<Rat, Rat> acc;
  for (size_t r = 0; r < t.size(); ++r) {
    if (r == i || r == k) continue;
    Int dr = det(t[r].eta, t[k].eta);
    if (dr == 0) continue;
    Rat order = t[r].level - t[i].level;
    if (sgn(order) < 0) return std::nullopt;
    acc[order] -= rat(dr, d);
  }
  std::vector<Monomial> out;
  for (auto& [o, c] : acc)
    if (sgn(c) != 0) out.push_back({c, o});
  if (out.empty() || sgn(out.front().order) != 0) return std::nullopt;
  return out;
}

}  // namespace

std::string qw_kind_name(QwKind k) {
  return k == QwKind::UnitPointSolved ? "UNIT_POINT_SOLVED" : "GEOMETRIC_CANDIDATE";
}

PotentialPresentation make_presentation(const Polygon& p, const Pt& x, const std::vector<HalfSpace>& ghosts) {
  PotentialPresentation pr;
  pr.point = x;
  pr.ghosts = ghosts;
  for (size_t i = 0; i < p.hs.size(); ++i) {
    const HalfSpace& h = p.hs[i];
    if (h.open()) continue;
    pr.terms.push_back({h.eta, h.kappa, h.level(x), static_cast<int>(i), h.ghost});
  }
  for (const auto& g : ghosts) pr.terms.push_back({g.eta, g.kappa, g.level(x), -1, true});
  return pr;
}

bool geometric_only(const Polygon& p) { return p.bounded && !p.has_open_facets() && is_smooth(p); }

std::optional<QwCertificate> geometric_nondisp_test(const Polygon& p, const Pt& x) {
  if (!p.contains(x, Mode::Interior)) throw DomainError("geometric test: point " + to_string(x) + " is not interior");
  FacetProfile prof = closest_facet_profile(p, x, false);
  bool ok = prof.e1.size() >= 3;
  if (prof.e1.size() == 2 && p.hs[prof.e1[0]].eta == -p.hs[prof.e1[1]].eta && prof.e2.size() >= 2) ok = true;
  if (!ok) return std::nullopt;
  QwCertificate c;
  c.kind = QwKind::GeometricCandidate;
  c.presentation = make_presentation(p, x, {});
  c.s = prof.s;
  c.e1 = prof.e1;
  c.e2 = prof.e2;
  c.heuristic = !geometric_only(p);
  for (size_t i = 0; i < c.presentation.terms.size(); ++i)
    if (c.presentation.terms[i].level == c.s) c.tied.push_back(static_cast<int>(i));
  return c;
}

bool is_valid_ghost(const Polygon& p, const HalfSpace& g) {
  if (!is_primitive(g.eta) || p.vertices.empty()) return false;
  for (const auto& v : p.vertices)
    if (sgn(g.level(v.p)) < 0) return false;
  for (const auto& e : p.edges) {
    if (!e.end && dot(g.eta, e.dir) < 0) return false;
    if (!e.start && dot(g.eta, e.dir) > 0) return false;
  }
  for (const auto& e : p.edges) {
    bool zero_start = !e.start || sgn(g.level(*e.start)) == 0;
    bool zero_end = !e.end || sgn(g.level(*e.end)) == 0;
    bool flat = dot(g.eta, e.dir) == 0;
    bool whole_edge = zero_start && zero_end && (flat || (e.start && e.end));
    if (whole_edge && (e.start || e.end) && !p.hs[e.facet].open()) return false;
  }
  return true;
}

std::vector<HalfSpace> enumerate_ghosts(const Polygon& p, const Pt& x, Int H) {
  if (H < 1) throw DomainError("ghost height must be >= 1");
  std::vector<Rat> levels;
  for (const auto& h : p.hs)
    if (!h.ghost && !h.open()) levels.push_back(h.level(x));
  if (levels.empty()) throw DomainError("polygon has no closed facet");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<HalfSpace> out;
  for (const Rat& s : levels)
    for (Int a = -H; a <= H; ++a)
      for (Int b = -H; b <= H; ++b) {
        IVec eta{a, b};
        if ((a == 0 && b == 0) || !is_primitive(eta)) continue;
        HalfSpace g = closed_hs(eta, s - dot(eta, x));
        g.ghost = true;
        bool dup = false;
        // an open facet carries no term, so a closed ghost on its line is new
        for (const auto& h : p.hs) dup = dup || (!h.open() && same_halfspace(h, g));
        if (dup || !is_valid_ghost(p, g)) continue;
        out.push_back(g);
      }
  return out;
}

std::optional<QwCertificate> solve_leading_order(const PotentialPresentation& pres) {
  const auto& t = pres.terms;
  if (t.size() < 2) return std::nullopt;
  Rat s = t[0].level;
  for (const auto& term : t) s = std::min(s, term.level);
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t k = i + 1; k < t.size(); ++k) {
      if (det(t[i].eta, t[k].eta) == 0) continue;
      auto si = pivot_series(t, i, k);
      if (!si) continue;
      auto sk = pivot_series(t, k, i);
      if (!sk) continue;
      QwCertificate c;
      c.kind = QwKind::UnitPointSolved;
      c.presentation = pres;
      c.s = s;
      c.pivots = {static_cast<int>(i), static_cast<int>(k)};
      c.exp_alpha.assign(t.size(), {Monomial{Rat(1), Rat(0)}});
      c.exp_alpha[i] = *si;
      c.exp_alpha[k] = *sk;
      for (size_t r = 0; r < t.size(); ++r) {
        c.unit_solution.push_back(c.exp_alpha[r].front().coeff);
        if (t[r].level == s) c.tied.push_back(static_cast<int>(r));
      }
      return c;
    }
  return std::nullopt;
}

std::optional<QwCertificate> search_unit_point(const Polygon& p, const Pt& x, const QwOptions& opt) {
  if (!p.contains(x, Mode::Interior)) throw DomainError("qW search: point " + to_string(x) + " is not interior");
  PotentialPresentation base = make_presentation(p, x, {});
  if (auto c = solve_leading_order(base)) return c;
  if (opt.max_subset < 1) return std::nullopt;
  auto G = enumerate_ghosts(p, x, opt.ghost_height);

  // Pivots either both sit at the minimal level s, where higher terms only add positive
  // orders, or the level-s terms are exactly one antipodal pair. Outside that case a subset
  // with a ghost above s solves only if its level-s part does, and that part came earlier.
  Rat s = base.terms.front().level;
  for (const auto& t : base.terms) s = std::min(s, t.level);
  std::vector<IVec> bottom;
  for (const auto& t : base.terms)
    if (t.level == s) bottom.push_back(t.eta);
  std::vector<bool> low(G.size());
  for (size_t a = 0; a < G.size(); ++a) low[a] = G[a].level(x) == s;
  auto antipodal = [&](std::initializer_list<size_t> extra) {
    std::vector<IVec> b = bottom;
    for (size_t a : extra)
      if (low[a]) b.push_back(G[a].eta);
    return b.size() == 2 && b[0] == -b[1];
  };

  for (size_t a = 0; a < G.size(); ++a) {
    if (!low[a] && !antipodal({})) continue;
    if (auto c = solve_leading_order(make_presentation(p, x, {G[a]}))) return c;
  }
  if (opt.max_subset < 2) return std::nullopt;
  for (size_t a = 0; a < G.size(); ++a)
    for (size_t b = a + 1; b < G.size(); ++b) {
      if (!(low[a] && low[b]) && !antipodal({a, b})) continue;
      if (auto c = solve_leading_order(make_presentation(p, x, {G[a], G[b]}))) return c;
    }
  return std::nullopt;
}

std::optional<QwCertificate> certify_nondisplaceable(const Polygon& p, const Pt& x, const QwOptions& opt) {
  // On smooth compact polygons every tied point solves once all coefficients are free,
  // so only the closest-facet test is meaningful there.
  if (geometric_only(p)) return geometric_nondisp_test(p, x);
  return search_unit_point(p, x, opt);
}

SectorRegion sector_nondisp_region(Int n, Int m) {
  SectorDuality d = dual_pair(n, m);
  Int E = hj_expand(n, m).terms.front();
  Int Et = hj_expand(d.n_tilde, m).terms.front();
  return {rat(E, 2), rat(2 * m - Et * d.n_tilde, 2 * n - Et * d.q)};
}

bool verify_qw(const Polygon& p, const QwCertificate& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Pt& x = c.presentation.point;
  if (!p.contains(x, Mode::Interior)) return fail("point is not interior");
  for (const auto& g : c.presentation.ghosts)
    if (!is_valid_ghost(p, g)) return fail("ghost " + to_string(g.eta) + " is not a valid ghost");
  PotentialPresentation fresh = make_presentation(p, x, c.presentation.ghosts);
  const auto& t = fresh.terms;
  if (t.size() != c.presentation.terms.size()) return fail("term count differs from the polygon presentation");
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].eta != c.presentation.terms[i].eta || t[i].level != c.presentation.terms[i].level)
      return fail("term " + std::to_string(i) + " differs from the polygon presentation");
  Rat s = t[0].level;
  for (const auto& term : t) s = std::min(s, term.level);
  if (s != c.s) return fail("minimal level mismatch");

  if (c.kind == QwKind::GeometricCandidate) {
    FacetProfile prof = closest_facet_profile(p, x, false);
    if (prof.e1 != c.e1 || prof.e2 != c.e2) return fail("closest-facet profile mismatch");
    bool ok = prof.e1.size() >= 3 ||
              (prof.e1.size() == 2 && p.hs[prof.e1[0]].eta == -p.hs[prof.e1[1]].eta && prof.e2.size() >= 2);
    return ok ? true : fail("profile does not meet the candidate condition");
  }

  if (c.exp_alpha.size() != t.size() || c.unit_solution.size() != t.size())
    return fail("exp(alpha) table has the wrong size");
  std::map<Rat, std::pair<Rat, Rat>> eq;  // q-order -> both derivative equations
  for (size_t i = 0; i < t.size(); ++i) {
    const auto& ser = c.exp_alpha[i];
    if (ser.empty()) return fail("empty exp(alpha) series");
    std::map<Rat, Rat> merged;
    for (const auto& mono : ser) {
      if (sgn(mono.order) < 0) return fail("exp(alpha) has a negative q-order");
      merged[mono.order] += mono.coeff;
    }
    auto lead = merged.find(Rat(0));
    if (lead == merged.end() || sgn(lead->second) == 0) return fail("exp(alpha) is not a unit");
    if (lead->second != c.unit_solution[i]) return fail("unit solution mismatch");
    for (auto& [o, coef] : merged) {
      auto& slot = eq[o + t[i].level];
      slot.first += coef * static_cast<long>(t[i].eta.a);
      slot.second += coef * static_cast<long>(t[i].eta.b);
    }
  }
  for (auto& [o, v] : eq)
    if (sgn(v.first) != 0 || sgn(v.second) != 0)
      return fail("critical equations do not vanish at q-order " + to_string(o));
  return true;
}

}  // namespace toric
