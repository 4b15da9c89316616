#include "toric/certificates.hpp"
#include "toric/classifier.hpp"
#include "toric/qw.hpp"
#include "toric/resolutions.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

TEST(Geometric, CliffordAndHirzebruchStems) {
  auto c = geometric_nondisp_test(cp2(6), {2, 2});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->e1.size(), 3u);
  Polygon h = hirzebruch(3, rat(7, 2));
  auto u0 = geometric_nondisp_test(h, {rat(7, 4), 1});
  ASSERT_TRUE(u0);
  EXPECT_EQ(u0->e1.size(), 2u);
  EXPECT_EQ(u0->e2.size(), 2u);
  EXPECT_FALSE(geometric_nondisp_test(h, {1, rat(1, 2)}));
  Polygon square = build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-1, 0}, 2), closed_hs({0, -1}, 2)});
  auto sq = geometric_nondisp_test(square, {1, 1});
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->e1.size(), 4u);
}

TEST(Ghosts, TieTheMinimalLevelAndStayValid) {
  Polygon s = sector(3, 7);
  Pt x{rat(8, 5), 1};
  auto G = enumerate_ghosts(s, x, 4);
  ASSERT_FALSE(G.empty());
  for (const auto& g : G) {
    EXPECT_TRUE(g.ghost);
    EXPECT_TRUE(is_valid_ghost(s, g));
    for (const auto& h : s.hs) EXPECT_FALSE(h.eta == g.eta && h.kappa == g.kappa);
  }
  bool has_01 = false, has_m13 = false;
  for (const auto& g : G) {
    has_01 = has_01 || g.eta == IVec{0, 1};
    has_m13 = has_m13 || g.eta == IVec{-1, 3};
  }
  EXPECT_TRUE(has_01 && has_m13);
  // a half-space cutting the polygon is not a ghost
  EXPECT_FALSE(is_valid_ghost(s, closed_hs({0, -1}, 3)));
}

TEST(UnitPoint, SectorThreeSevenSolves) {
  Polygon s = sector(3, 7);
  Pt x{rat(8, 5), 1};
  auto c = certify_nondisplaceable(s, x);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, QwKind::UnitPointSolved);
  std::string why;
  EXPECT_TRUE(verify_qw(s, *c, &why)) << why;
  EXPECT_FALSE(certify_nondisplaceable(s, {1, 1}));
}

TEST(UnitPoint, OMinusMHasNoCriticalPointWithoutGhosts) {
  for (Int m : {2, 3, 4}) {
    Polygon p = resolve_sector(1, m, {-1});
    EXPECT_FALSE(solve_leading_order(make_presentation(p, {1, 1}, {})));
  }
}

TEST(UnitPoint, ResolvedP135AtN1) {
  Rat k6 = rat(29, 5), k7 = rat(13, 5);
  Polygon p = p135_resolved_at_30(k6, k7);
  auto c = certify_nondisplaceable(p, {k7 / 2, k6 / 2 - k7 / 2});
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_qw(p, *c));
}

TEST(SectorRegion, SlopesFromContinuedFractions) {
  auto r = sector_nondisp_region(3, 7);
  EXPECT_EQ(r.lower, rat(3, 2));
  EXPECT_EQ(r.upper, 2);
  r = sector_nondisp_region(3, 5);
  EXPECT_EQ(r.lower, 1);
  EXPECT_EQ(r.upper, rat(4, 3));
  r = sector_nondisp_region(2, 3);
  EXPECT_EQ(r.lower, 1);
  EXPECT_EQ(r.upper, 1);
}

// The pruned ghost-subset search finds a certificate exactly when brute force over all
// subsets of size <= 2 does.
TEST(UnitPoint, PrunedSearchMatchesBruteForce) {
  std::vector<Polygon> polys{sector(3, 7), resolve_sector(2, 3, {-1, -1}), finite_volume_a2(rat(3, 4), rat(1, 2)),
                             p135_resolved_at_30(rat(29, 5), rat(13, 5)), sector_open(2, 3, 2)};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> D(1, 32);
  for (const auto& p : polys) {
    int tested = 0, tries = 0;
    while (tested < 25 && tries++ < 2000) {
      Pt x{rat(D(rng), 8), rat(D(rng), 16)};
      if (!p.contains(x, Mode::Interior)) continue;
      ++tested;
      bool brute = false;
      auto G = enumerate_ghosts(p, x, 3);
      brute = brute || solve_leading_order(make_presentation(p, x, {}));
      for (size_t a = 0; a < G.size() && !brute; ++a) {
        brute = brute || solve_leading_order(make_presentation(p, x, {G[a]}));
        for (size_t b = a + 1; b < G.size() && !brute; ++b)
          brute = brute || solve_leading_order(make_presentation(p, x, {G[a], G[b]}));
      }
      EXPECT_EQ(search_unit_point(p, x, {3, 2}).has_value(), brute) << p.name << " " << to_string(x);
    }
  }
}

namespace {

Json certificate_at(const Polygon& p, const Pt& u) {
  Verdict v = classify_point(p, u);
  EXPECT_FALSE(v.certificate.is_null()) << to_string(u);
  return v.certificate;
}

}  // namespace

TEST(Certificates, EveryKindRoundTripsAndVerifies) {
  Polygon h = hirzebruch(3, rat(7, 2));
  std::vector<std::pair<Polygon, Pt>> cases{
      {h, {1, rat(1, 2)}},                      // probe
      {h, {rat(3, 2), rat(7, 6)}},              // symmetric extension
      {sector_open(2, 3, 2), {2, 2}},           // flag
      {sector(3, 7), {rat(8, 5), 1}},           // unit point
      {h, {rat(7, 4), 1}},                      // geometric candidate
  };
  for (const auto& [p, u] : cases) {
    Json c = certificate_at(p, u);
    Json again = Json::parse(c.dump());
    auto r = verify_certificate(p, again);
    EXPECT_TRUE(r.ok) << r.reason << " " << c.dump();
  }
}

TEST(Certificates, TamperedCertificatesAreRejected) {
  Polygon h = hirzebruch(3, rat(7, 2));
  Json probe = certificate_at(h, {1, rat(1, 2)});
  Json bad = probe;
  bad["probe"]["length"] = "1";
  EXPECT_FALSE(verify_certificate(h, bad).ok);
  bad = probe;
  bad["point"] = Json::array({"3", "1/2"});  // beyond the midpoint or off the probe
  EXPECT_FALSE(verify_certificate(h, bad).ok);
  bad = probe;
  bad["type"] = "wormhole";
  EXPECT_FALSE(verify_certificate(h, bad).ok);
  EXPECT_FALSE(verify_certificate(h, Json::object()).ok);

  Json sym = certificate_at(h, {rat(3, 2), rat(7, 6)});
  bad = sym;
  bad["total_length"] = "100";
  EXPECT_FALSE(verify_certificate(h, bad).ok);

  Polygon s = sector(3, 7);
  Json qw = certificate_at(s, {rat(8, 5), 1});
  bad = qw;
  bad["unit_solution"][0] = "5";
  EXPECT_FALSE(verify_certificate(s, bad).ok);
  bad = qw;
  bad["exp_alpha"][bad["pivots"][0].get<int>()][0]["coeff"] = "7";
  EXPECT_FALSE(verify_certificate(s, bad).ok);
  bad = qw;
  bad["ghosts"][0]["kappa"] = "-40";
  EXPECT_FALSE(verify_certificate(s, bad).ok);

  // a valid certificate does not transfer to another polygon
  EXPECT_FALSE(verify_certificate(cp2(6), sym).ok);
}
