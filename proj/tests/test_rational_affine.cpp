#include "toric/affine.hpp"
#include "toric/resolutions.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace toric;

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(parse_rat("6/4"), rat(3, 2));
  EXPECT_EQ(parse_rat("-3"), rat(-3));
  EXPECT_EQ(to_string(rat(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(rat(5)), "5");
  EXPECT_THROW(parse_rat("1/0"), DomainError);
  EXPECT_THROW(parse_rat("abc"), DomainError);
  EXPECT_THROW(rat(1, 0), DomainError);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_rat(rat(-1, 2)), -1);
  EXPECT_EQ(ceil_rat(rat(-1, 2)), 0);
  EXPECT_EQ(floor_rat(rat(7, 3)), 2);
  EXPECT_EQ(to_int(rat(4)), 4);
  EXPECT_THROW(to_int(rat(1, 2)), DomainError);
}

TEST(Rational, DistOrdersInfinityLast) {
  EXPECT_LT(Dist::of(1000), Dist::infinity());
  EXPECT_EQ(Dist::infinity(), Dist::infinity());
  EXPECT_EQ(parse_dist(to_string(Dist::infinity())), Dist::infinity());
  EXPECT_EQ(parse_dist("3/7"), Dist::of(rat(3, 7)));
  EXPECT_THROW(Dist::infinity().value(), DomainError);
}

// d_v and d_aff disagree: moving along (-2,3) from (1,0) reaches x1 = 0 at t = 1/2.
TEST(Affine, DirectedDistanceParadox) {
  Dist d = directed_distance({1, 0}, {1, 0}, 0, {-2, 3});
  ASSERT_TRUE(d.finite());
  EXPECT_EQ(d.v, rat(1, 2));
  EXPECT_EQ(affine_distance_to_hyperplane({1, 0}, {1, 0}, 0), 1);
}

TEST(Affine, DirectedDistanceAwayIsInfinite) {
  EXPECT_EQ(directed_distance({1, 0}, {1, 0}, 0, {1, 0}), Dist::infinity());
}

TEST(Affine, DistanceAlongLine) {
  EXPECT_EQ(affine_distance_along_line({0, 0}, {rat(3, 2), rat(9, 4)}), rat(3, 4));  // (2,3) * 3/4
  EXPECT_EQ(affine_distance_along_line({1, 1}, {1, 1}), 0);
  EXPECT_EQ(primitive_direction({0, 0}, {4, -6}), (IVec{2, -3}));
}

TEST(Affine, Transversality) {
  EXPECT_TRUE(is_integrally_transverse({1, 0}, {1, 5}));
  EXPECT_TRUE(is_integrally_transverse({-1, 2}, {1, 0}));
  EXPECT_FALSE(is_integrally_transverse({1, 0}, {2, 1}));
  EXPECT_FALSE(is_integrally_transverse({1, 0}, {0, 1}));
  EXPECT_EQ(make_primitive({6, -4}), std::make_pair(IVec{3, -2}, Int(2)));
}

// A_Q swaps the two facets and is an integral involution; checked on random data.
TEST(Affine, ReflectionIsInvolutionSwappingFacets) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> U(-6, 6);
  int tested = 0;
  while (tested < 200) {
    IVec v{U(rng), U(rng)};
    if (!is_primitive(v)) continue;
    // eta with <eta,v> = 1 and eta' with <eta',v> = -1
    IVec eta;
    bool found = false;
    for (int a = -6; a <= 6 && !found; ++a)
      for (int b = -6; b <= 6 && !found; ++b)
        if (dot(IVec{a, b}, v) == 1) {
          eta = {a, b};
          found = true;
        }
    ASSERT_TRUE(found);
    IVec etap = -eta + Int(U(rng)) * IVec{-v.b, v.a};
    ASSERT_EQ(dot(etap, v), -1);
    Rat k(U(rng)), kp(U(rng));
    AffineReflection A = reflection_from_facets(eta, k, etap, kp, v);
    EXPECT_TRUE(A.is_involution());
    EXPECT_EQ(std::abs(A.det()), 1);
    EXPECT_EQ(A.apply_linear(v), -v);
    // a point on F maps onto F'
    Pt x = eta.a != 0 ? Pt{Rat(-k) / static_cast<long>(eta.a), 0} : Pt{0, Rat(-k) / static_cast<long>(eta.b)};
    ASSERT_EQ(dot(eta, x) + k, 0);
    Pt y = A.apply(x);
    EXPECT_EQ(dot(etap, y) + kp, 0);
    ++tested;
  }
}

TEST(HirzebruchJung, WorkedExample) {
  auto cf = hj_expand(5, 8);
  EXPECT_EQ(cf.terms, (std::vector<Int>{2, 3, 2}));
  auto eta = conormal_chain(cf);
  std::vector<IVec> expect{{1, 0}, {0, 1}, {-1, 2}, {-3, 5}, {-5, 8}};
  EXPECT_EQ(eta, expect);
  EXPECT_EQ(hj_evaluate(cf.terms), rat(5, 8));
}

TEST(HirzebruchJung, RejectsBadInput) {
  EXPECT_THROW(hj_expand(2, 4), DomainError);
  EXPECT_THROW(hj_expand(5, 3), DomainError);
  EXPECT_THROW(hj_evaluate({3, 1}), DomainError);
  EXPECT_THROW(dual_pair(1, 5), DomainError);
}

TEST(HirzebruchJung, RandomRoundTripAndDuality) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Int> M(3, 5000);
  int tested = 0;
  while (tested < 300) {
    Int m = M(rng);
    Int n = std::uniform_int_distribution<Int>(2, m - 1)(rng);
    if (std::gcd(n, m) != 1) continue;
    ++tested;
    auto cf = hj_expand(n, m);
    EXPECT_EQ(hj_evaluate(cf.terms), rat(n, m));
    for (Int e : cf.terms) EXPECT_GE(e, 2);
    auto d = dual_pair(n, m);
    EXPECT_EQ(m * d.q - n * d.n_tilde, -1);
    Int detS = d.S[0][0] * d.S[1][1] - d.S[0][1] * d.S[1][0];
    EXPECT_EQ(detS, -1);
    // every resolution vertex is smooth: consecutive conormals form a basis
    auto eta = conormal_chain(cf);
    for (size_t j = 0; j + 1 < eta.size(); ++j) EXPECT_EQ(det(eta[j], eta[j + 1]), 1);
  }
}
