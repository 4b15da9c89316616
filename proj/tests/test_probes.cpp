#include "toric/certificates.hpp"
#include "toric/classifier.hpp"
#include "toric/probes.hpp"
#include "toric/resolutions.hpp"

#include <gtest/gtest.h>

using namespace toric;

// hirzebruch facets: 0 {x1>=0}, 1 {x2>=0}, 2 {2-x2>=0}, 3 slant
TEST(Probe, MaximalLengthFromExit) {
  Polygon h = hirzebruch(3, rat(7, 2));
  Probe pr = make_probe(h, 0, {0, 1}, {1, 0});
  EXPECT_EQ(pr.length, Dist::of(rat(7, 2)));
  ASSERT_TRUE(pr.endpoint);
  EXPECT_EQ(*pr.endpoint, (Pt{rat(7, 2), 1}));
  Probe c = make_probe(cp2(6), 0, {0, 2}, {1, 0});
  EXPECT_EQ(c.length, Dist::of(4));
}

TEST(Probe, RejectsBadConstruction) {
  Polygon h = hirzebruch(3, rat(7, 2));
  EXPECT_THROW(make_probe(h, 0, {0, 1}, {2, 1}), DomainError);          // not integrally transverse
  EXPECT_THROW(make_probe(h, 0, {0, 0}, {1, 0}), DomainError);          // base at a vertex
  EXPECT_THROW(make_probe(h, 0, {0, 1}, {1, 0}, Rat(5)), DomainError);  // longer than the exit
}

TEST(Probe, UnboundedProbeIsInfinite) {
  Probe pr = make_probe(sector(3, 7), 0, {0, 1}, {1, 1});
  EXPECT_EQ(pr.length, Dist::infinity());
  EXPECT_FALSE(pr.endpoint);
  EXPECT_TRUE(probe_displaces(pr, {5, 6}));
}

TEST(Probe, HalfwayCriterionIsStrict) {
  Polygon h = hirzebruch(3, rat(7, 2));
  Probe pr = make_probe(h, 0, {0, rat(3, 2)}, {1, 0});
  EXPECT_EQ(pr.length, Dist::of(2));
  EXPECT_TRUE(probe_displaces(pr, {rat(3, 4), rat(3, 2)}));
  EXPECT_FALSE(probe_displaces(pr, {1, rat(3, 2)}));  // exact midpoint
  EXPECT_FALSE(probe_displaces(pr, {rat(3, 2), rat(3, 2)}));
  EXPECT_THROW(probe_displaces(pr, {1, 1}), DomainError);  // off the probe

  Probe c = make_probe(cp2(6), 0, {0, 2}, {1, 0});
  EXPECT_FALSE(probe_displaces(c, {2, 2}));
}

TEST(Probe, SymmetricExitDetection) {
  Polygon h = hirzebruch(3, rat(7, 2));
  auto top = is_symmetric(h, make_probe(h, 1, {rat(1, 4), 0}, {0, 1}));
  ASSERT_TRUE(top);
  EXPECT_EQ(*top, 2);
  // slant exit has <eta,v> = -4
  EXPECT_FALSE(is_symmetric(h, make_probe(h, 1, {rat(1, 4), 0}, {1, 1})));
  // exits through the vertex (3,2)
  Polygon rect = build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-1, 0}, 3), closed_hs({0, -1}, 2)});
  EXPECT_FALSE(is_symmetric(rect, make_probe(rect, 1, {1, 0}, {1, 1})));
}

TEST(Probe, TransverseDirectionsAreOrderedByHeight) {
  auto dirs = transverse_directions({-3, 7}, 5);
  ASSERT_FALSE(dirs.empty());
  for (size_t i = 0; i < dirs.size(); ++i) {
    EXPECT_EQ(dot(IVec{-3, 7}, dirs[i]), 1);
    EXPECT_LE(height(dirs[i]), 5);
    if (i) EXPECT_LE(height(dirs[i - 1]), height(dirs[i]));
  }
  EXPECT_NE(std::find(dirs.begin(), dirs.end(), IVec{-5, -2}), dirs.end());
}

// Extending P by a symmetric probe on its own exit facet reproduces d_vP(b_P, F_Q) = 4.
TEST(SymmetricExtension, CP2GainsNothing) {
  Polygon p = cp2(6);
  Probe P = make_probe(p, 0, {0, 2}, {1, 0}, Rat(3));
  Probe Q = make_probe(p, 2, {3, 3}, {0, -1});
  auto sp = build_symmetric_extension(p, P, Q);
  EXPECT_EQ(sp.x_pq, (Pt{3, 2}));
  EXPECT_EQ(sp.total_length, 4);
  EXPECT_TRUE(sp.reflection.is_involution());
  EXPECT_FALSE(sep_displaces(sp, {2, 2}));
  EXPECT_TRUE(sep_displaces(sp, {1, 2}));
}

TEST(SymmetricExtension, ReflectionFromResolvedP135) {
  Rat k6 = rat(29, 5);
  AffineReflection A = reflection_from_facets({-2, -1}, k6, {1, 0}, 0, {-1, 1});
  Pt x{rat(1, 3), rat(2, 7)};
  EXPECT_EQ(A.apply(x), (Pt{-2 * x.x - x.y + k6, 3 * x.x + 2 * x.y - k6}));
}

TEST(SymmetricExtension, HirzebruchMedianPointsUseIt) {
  Polygon h = hirzebruch(3, rat(7, 2));
  for (Pt u : {Pt{rat(3, 2), rat(7, 6)}, Pt{rat(5, 4), rat(4, 3)}, Pt{1, rat(3, 2)}}) {
    SearchConfig cfg;
    EXPECT_FALSE(find_probe(h, u, cfg)) << to_string(u);
    auto cert = find_symmetric_extension(h, u, cfg);
    ASSERT_TRUE(cert) << to_string(u);
    EXPECT_TRUE(verify_certificate(h, *cert).ok);
    EXPECT_EQ(classify_point(h, u, cfg).cls, VerdictClass::DisplaceableSymmetricExt);
  }
}

TEST(Flag, CautionaryConstructionFailsSecondInequality) {
  Polygon p = cp2(6);
  Probe P = make_probe(p, 0, {0, 2}, {1, 0}, Rat(3));
  Probe Q = make_probe(p, 2, {3, 3}, {0, -1});
  try {
    build_flagged(p, P, Q, FlagKind::General, 0, {3, rat(3, 2)}, {3, 0}, rat(3, 2));
    FAIL() << "flag was accepted";
  } catch (const FlagRejected& e) {
    EXPECT_EQ(e.inequality, kSecondInequality);
  }
  try {
    build_flagged(p, P, Q, FlagKind::Parallel, 0, {3, rat(3, 2)}, {3, 0}, rat(3, 2));
    FAIL() << "flag was accepted";
  } catch (const DomainError&) {
  }
}

TEST(Flag, NoFlagHelpsAtTheCliffordPoint) {
  Polygon p = cp2(6);
  Probe P = make_probe(p, 0, {0, 2}, {1, 0}, Rat(3));
  Probe Q = make_probe(p, 2, {3, 3}, {0, -1});
  for (Rat mu : {Rat(0), rat(1, 2), Rat(1)}) {
    auto fp = maximize_flag(p, P, Q, FlagKind::General, mu);
    if (fp) EXPECT_FALSE(flagged_displaces(*fp, {2, 2}));
  }
  EXPECT_FALSE(find_flagged_extension(p, {2, 2}, {}));
}

TEST(Flag, OpenSectorDiagonalPoint) {
  Polygon p = sector_open(2, 3, 2);
  Pt u{2, 2};
  EXPECT_FALSE(find_probe(p, u, {}));
  auto cert = find_flagged_extension(p, u, {});
  ASSERT_TRUE(cert);
  EXPECT_TRUE(verify_certificate(p, *cert).ok);
  EXPECT_GT(rat_from_json((*cert)["total_length"]), 4);
}
