#include "toric/lp.hpp"
#include "toric/polygon.hpp"
#include "toric/resolutions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace toric;

namespace {

bool has_vertex(const Polygon& p, const Pt& x) {
  return std::any_of(p.vertices.begin(), p.vertices.end(), [&](const Vertex& v) { return v.p == x; });
}

}  // namespace

TEST(Polygon, HirzebruchVerticesAndSmoothness) {
  Polygon p = hirzebruch(3, rat(7, 2));
  ASSERT_EQ(p.vertices.size(), 4u);
  EXPECT_TRUE(has_vertex(p, {0, 0}));
  EXPECT_TRUE(has_vertex(p, {0, 2}));
  EXPECT_TRUE(has_vertex(p, {rat(13, 2), 0}));
  EXPECT_TRUE(has_vertex(p, {rat(1, 2), 2}));
  EXPECT_TRUE(p.bounded);
  EXPECT_TRUE(is_smooth(p));
}

TEST(Polygon, SectorIsSingularAndUnbounded) {
  Polygon p = sector(3, 7);
  EXPECT_FALSE(p.bounded);
  auto rep = smoothness(p);
  EXPECT_FALSE(rep.smooth);
  ASSERT_EQ(rep.vertex_order.size(), 1u);
  EXPECT_EQ(rep.vertex_order[0], 7);
}

TEST(Polygon, WeightedProjectiveSingularities) {
  auto rep = smoothness(weighted_projective(3, 5));
  std::vector<Int> orders = rep.vertex_order;
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<Int>{1, 3, 5}));
}

TEST(Polygon, ContainsRespectsOpenFacets) {
  Polygon p = sector_open(2, 3, 2);
  Pt on_open{1, 0};  // -2 + 0 + 2 = 0
  EXPECT_FALSE(p.contains(on_open, Mode::AsDeclared));
  EXPECT_TRUE(p.contains(on_open, Mode::Closure));
  EXPECT_FALSE(p.contains(on_open, Mode::Interior));
  EXPECT_TRUE(p.contains({0, 1}, Mode::AsDeclared));
  EXPECT_FALSE(p.contains({0, 1}, Mode::Interior));
}

TEST(Polygon, RedundantHalfSpaceBecomesGhost) {
  Polygon p = build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-1, -1}, 4),
                             closed_hs({-1, 0}, 10)});
  EXPECT_FALSE(p.hs[0].ghost);
  EXPECT_TRUE(p.hs[3].ghost);
  EXPECT_EQ(p.geometric().size(), 3u);
}

TEST(Polygon, EmptyIntersectionThrows) {
  EXPECT_THROW(build_polygon({closed_hs({1, 0}, -5), closed_hs({-1, 0}, 1), closed_hs({0, 1}, 0)}), DomainError);
}

TEST(Polygon, RayExitAtFacetAndVertex) {
  Polygon p = cp2(6);
  RayExit e = ray_exit(p, {1, 1}, {1, 0});
  ASSERT_TRUE(e.bounded);
  EXPECT_EQ(e.point, (Pt{5, 1}));
  EXPECT_EQ(e.t, 4);
  EXPECT_FALSE(e.at_vertex());
  RayExit v = ray_exit(p, {1, 1}, {-1, -1});
  EXPECT_TRUE(v.at_vertex());
  EXPECT_EQ(v.point, (Pt{0, 0}));
  EXPECT_THROW(ray_exit(p, {0, 1}, {1, 0}), DomainError);
}

TEST(Polygon, ClosestFacetProfileAtCentre) {
  auto prof = closest_facet_profile(cp2(6), {2, 2}, false);
  EXPECT_EQ(prof.s, 2);
  EXPECT_EQ(prof.e1.size(), 3u);
}

TEST(Polygon, JsonRoundTrip) {
  for (const auto& p : {finite_volume_a2(rat(3, 4), rat(1, 2)), hirzebruch(2, 3), sector(2, 5)}) {
    Polygon q = polygon_from_json(to_json(p));
    ASSERT_EQ(q.hs.size(), p.hs.size());
    for (size_t i = 0; i < p.hs.size(); ++i) {
      EXPECT_EQ(q.hs[i].eta, p.hs[i].eta);
      EXPECT_EQ(q.hs[i].kappa, p.hs[i].kappa);
      EXPECT_EQ(q.hs[i].closure, p.hs[i].closure);
    }
    EXPECT_EQ(to_json(q), to_json(p));
  }
}

TEST(Polygon, JsonNormalizesNonPrimitiveConormals) {
  Json j = Json::parse(R"({"halfspaces":[{"eta":[2,0],"kappa":"0"},{"eta":[0,1],"kappa":0},{"eta":[-1,-1],"kappa":"3"}]})");
  Polygon p = polygon_from_json(j);
  EXPECT_EQ(p.hs[0].eta, (IVec{1, 0}));
  EXPECT_EQ(p.hs[0].label, 2);
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"halfspaces":[{"eta":[1,0],"closure":"ajar"}]})")), DomainError);
}

TEST(Polygon, UnimodularTransformPreservesSmoothness) {
  Polygon p = hirzebruch(2, 3);
  Polygon q = transform_polygon(p, {{{1, 1}, {0, 1}}}, {rat(1, 2), -3});
  EXPECT_EQ(q.vertices.size(), p.vertices.size());
  EXPECT_TRUE(is_smooth(q));
}

TEST(Scenarios, ValidityWindowsAreEnforced) {
  EXPECT_THROW(resolve_sector(2, 3, {-1}), DomainError);
  EXPECT_THROW(resolve_sector(2, 3, {1, -1}), DomainError);
  EXPECT_THROW(p135_resolved_at_30(rat(29, 5), rat(29, 10)), DomainError);
  EXPECT_NO_THROW(p135_resolved_at_30(rat(29, 5), rat(13, 5)));
  EXPECT_THROW(make_scenario("no-such-scenario", {}), DomainError);
  for (const auto& s : scenario_list())
    if (s.params.empty() || s.params[0] == '[') EXPECT_NO_THROW(make_scenario(s.name, {})) << s.name;
  EXPECT_NO_THROW(make_scenario("sector", {"3", "7"}));
  EXPECT_THROW(make_scenario("sector", {"3"}), DomainError);
}

TEST(LinearProgram, SmallOptimum) {
  LinearProgram lp;
  int x = lp.add_var(), y = lp.add_var();
  lp.add_le({{x, 1}, {y, 2}}, 4);
  lp.add_le({{x, 3}, {y, 1}}, 6);
  lp.set_objective({{x, 1}, {y, 1}});
  auto r = lp.solve();
  ASSERT_EQ(r.status, LinearProgram::Status::Optimal);
  EXPECT_EQ(r.value, rat(14, 5));
  EXPECT_EQ(r.x[x], rat(8, 5));
  EXPECT_EQ(r.x[y], rat(6, 5));
}

TEST(LinearProgram, InfeasibleUnboundedAndFreeVariables) {
  LinearProgram a;
  int x = a.add_var();
  a.add_ge({{x, 1}}, 3);
  a.add_le({{x, 1}}, 2);
  a.set_objective({{x, 1}});
  EXPECT_EQ(a.solve().status, LinearProgram::Status::Infeasible);

  LinearProgram b;
  int y = b.add_var();
  b.set_objective({{y, 1}});
  EXPECT_EQ(b.solve().status, LinearProgram::Status::Unbounded);

  LinearProgram c;
  int z = c.add_var(std::nullopt, Rat(-2));  // z <= -2, free below
  c.set_objective({{z, 1}});
  auto r = c.solve();
  ASSERT_EQ(r.status, LinearProgram::Status::Optimal);
  EXPECT_EQ(r.x[z], -2);
}

// Exact and floating solves agree on random feasible programs; the exact optimum is checked
// against brute-force vertex enumeration.
TEST(LinearProgram, RandomAgreesWithVertexEnumeration) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> C(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    LinearProgram lp;
    int x = lp.add_var(), y = lp.add_var();
    std::vector<std::array<Rat, 3>> rows;
    for (int k = 0; k < 4; ++k) {
      Rat a(C(rng)), b(C(rng)), c(C(rng) * 3);
      rows.push_back({a, b, c});
      lp.add_le({{x, a}, {y, b}}, c);
    }
    Rat cx(C(rng) - 5), cy(C(rng) - 5);
    lp.set_objective({{x, cx}, {y, cy}});
    auto r = lp.solve();
    ASSERT_EQ(r.status, LinearProgram::Status::Optimal);
    // candidate vertices: pairwise intersections of rows and the axes
    std::vector<std::array<Rat, 3>> lines = rows;
    lines.push_back({1, 0, 0});
    lines.push_back({0, 1, 0});
    Rat best = 0;
    bool any = false;
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j) {
        Rat d = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
        if (d == 0) continue;
        Rat px = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / d;
        Rat py = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / d;
        if (px < 0 || py < 0) continue;
        bool ok = true;
        for (const auto& row : rows) ok = ok && row[0] * px + row[1] * py <= row[2];
        if (!ok) continue;
        Rat val = cx * px + cy * py;
        if (!any || val > best) best = val;
        any = true;
      }
    ASSERT_TRUE(any);
    EXPECT_EQ(r.value, best);
    auto approx = lp.solve_approx();
    ASSERT_EQ(approx.status, LinearProgram::Status::Optimal);
    EXPECT_NEAR(approx.value, best.get_d(), 1e-9);
  }
}
