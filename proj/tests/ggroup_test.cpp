#include "specdec/ggroup.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"

namespace specdec {
namespace {

// GGroups with carrier order <= 32, including nontrivial bases.
std::vector<GGroup> ggroup_zoo() {
  std::vector<GGroup> out;
  for (const auto& g :
       {trivial_group(), cyclic(2), cyclic(4), cyclic(6), cyclic(8),
        abelian({2, 2}), abelian({2, 4}), symmetric(3), dihedral(4),
        generalized_quaternion(3), generalized_quaternion(4), alternating(4),
        metacyclic(7, 1, 3, 1, 2), dihedral(6), abelian({2, 2, 2}),
        direct_product(symmetric(3), cyclic(3)), cyclic(27)}) {
    out.push_back(GGroup::plain(g));
    out.push_back(GGroup::identity(g));
  }
  // Z/2 -> S3 onto a transposition (element 2 in S3's numbering).
  out.push_back(GGroup::make(cyclic(2), symmetric(3), {0, 2}));
  // Z/2 -> D4 onto the reflection s (index 4).
  out.push_back(GGroup::make(cyclic(2), dihedral(4), {0, 4}));
  // Z/4 -> D4 onto the rotations.
  out.push_back(GGroup::make(cyclic(4), dihedral(4), {0, 1, 2, 3}));
  // Z/3 -> A4 onto a 3-cycle.
  {
    const auto a4 = alternating(4);
    Element three = 0;
    for (Element e = 1; e < a4.order(); ++e) {
      if (a4.element_order(e) == 3) {
        three = e;
        break;
      }
    }
    out.push_back(GGroup::make(cyclic(3), a4, {0, three, a4.mul(three, three)}));
  }
  // S3 -> Z/2 x Z/2 x ... trivial-image morphisms are covered by plain.
  return out;
}

TEST(GGroupTest, RejectsNonHomomorphism) {
  EXPECT_THROW(GGroup::make(cyclic(2), cyclic(3), {0, 1}), Error);
}

TEST(AdjointOrbitSubgroupTest, Examples) {
  const auto plain = GGroup::plain(cyclic(6));
  EXPECT_EQ(adjoint_orbit_subgroup(plain, 2), Subgroup({0, 2, 4}));

  const auto s3 = GGroup::identity(symmetric(3));
  EXPECT_EQ(adjoint_orbit_subgroup(s3, 2).size(), 6u);

  const auto z6 = GGroup::identity(cyclic(6));
  EXPECT_EQ(adjoint_orbit_subgroup(z6, 3), Subgroup({0, 3}));
}

TEST(AdjointOrbitSubgroupTest, StableAndContainsElement) {
  for (const auto& x : ggroup_zoo()) {
    for (Element e = 0; e < x.carrier().order(); ++e) {
      const auto gx = adjoint_orbit_subgroup(x, e);
      EXPECT_TRUE(gx.contains(e));
      EXPECT_TRUE(x.is_stable(gx));
    }
  }
}

TEST(FindZeroDivisorPairTest, Examples) {
  const auto klein = find_zero_divisor_pair(GGroup::plain(abelian({2, 2})));
  ASSERT_TRUE(klein.has_value());
  // Row-major labels: 1 = (0,1), 2 = (1,0).
  EXPECT_EQ(klein->x, 1u);
  EXPECT_EQ(klein->y, 2u);
  EXPECT_EQ(klein->gx, Subgroup({0, 1}));
  EXPECT_EQ(klein->gy, Subgroup({0, 2}));

  EXPECT_FALSE(find_zero_divisor_pair(GGroup::plain(cyclic(8))));
  EXPECT_FALSE(find_zero_divisor_pair(GGroup::plain(generalized_quaternion(3))));
  EXPECT_FALSE(find_zero_divisor_pair(GGroup::identity(symmetric(3))));

  const auto z6 = find_zero_divisor_pair(GGroup::plain(cyclic(6)));
  ASSERT_TRUE(z6.has_value());
  EXPECT_EQ(z6->x, 2u);
  EXPECT_EQ(z6->y, 3u);
}

TEST(FindZeroDivisorPairTest, MatchesBruteForce) {
  for (const auto& x : ggroup_zoo()) {
    const auto got = find_zero_divisor_pair(x);
    const auto want = oracle::zero_divisor_mod(x, {0});
    ASSERT_EQ(got.has_value(), want.has_value()) << x.carrier().name();
    if (got) {
      EXPECT_EQ(got->x, want->first);
      EXPECT_EQ(got->y, want->second);
    }
  }
}

TEST(FindZeroDivisorPairTest, CapIsEnforced) {
  Caps caps;
  caps.zero_divisor_scan = 10;
  EXPECT_THROW(find_zero_divisor_pair(GGroup::plain(cyclic(11)), caps), Error);
}

TEST(GStableSubgroupsTest, Examples) {
  const auto d4 = dihedral(4);
  std::vector<std::vector<Element>> all;
  for (const auto& s : g_stable_subgroups(GGroup::plain(d4))) {
    all.push_back(s.elements());
  }
  EXPECT_EQ(all, oracle::subsets_subgroups(d4, false));

  EXPECT_EQ(g_stable_subgroups(GGroup::identity(symmetric(3))).size(), 3u);
  EXPECT_EQ(g_stable_subgroups(GGroup::identity(cyclic(4))).size(), 3u);

  Caps caps;
  EXPECT_THROW(g_stable_subgroups(GGroup::plain(cyclic(33)), caps), Error);
}

TEST(GStableSubgroupsTest, MatchesSubsetFilter) {
  for (const auto& x : ggroup_zoo()) {
    if (x.carrier().order() > 16) continue;
    std::vector<std::vector<Element>> want;
    for (const auto& s : oracle::subsets_subgroups(x.carrier(), false)) {
      if (x.is_stable(Subgroup(s))) want.push_back(s);
    }
    std::vector<std::vector<Element>> got;
    for (const auto& s : g_stable_subgroups(x)) got.push_back(s.elements());
    EXPECT_EQ(got, want);
  }
}

TEST(LocalIndecomposabilityTest, Examples) {
  EXPECT_TRUE(is_locally_g_indecomposable(GGroup::plain(cyclic(8))).indecomposable);

  const auto d4 = is_locally_g_indecomposable(GGroup::plain(dihedral(4)));
  EXPECT_FALSE(d4.indecomposable);
  ASSERT_TRUE(d4.witness.has_value());
  // {1, r^2, s, s r^2} = {1, r^2} x {1, s}
  EXPECT_EQ(d4.witness->whole, Subgroup({0, 2, 4, 6}));
  EXPECT_EQ(d4.witness->first, Subgroup({0, 2}));
  EXPECT_EQ(d4.witness->second, Subgroup({0, 4}));

  EXPECT_TRUE(
      is_locally_g_indecomposable(GGroup::plain(trivial_group())).indecomposable);
}

// Domain <=> locally G-indecomposable.
TEST(LocalIndecomposabilityTest, EquivalentToNoZeroDivisors) {
  for (const auto& x : ggroup_zoo()) {
    EXPECT_EQ(is_domain(x), is_locally_g_indecomposable(x).indecomposable)
        << x.carrier().name() << " base " << x.base().order();
  }
}

TEST(TopCoupleAxiomsTest, InstancesHoldOnZoo) {
  for (const auto& x : ggroup_zoo()) {
    EXPECT_TRUE(check_injection_axiom(x).passed()) << x.carrier().name();
    EXPECT_TRUE(check_meet_axiom(x).passed()) << x.carrier().name();
    EXPECT_TRUE(check_quotient_axiom(x).passed()) << x.carrier().name();
  }
}

TEST(TopCoupleAxiomsTest, InjectionIntoDomainGivesDomain) {
  // Z/2 and Z/4 embed in Z/8 and Q8; both targets are domains.
  const auto z8 = GGroup::plain(cyclic(8));
  ASSERT_TRUE(is_domain(z8));
  EXPECT_TRUE(is_domain(sub_ggroup(z8, Subgroup({0, 2, 4, 6}))));
  const auto q8 = GGroup::plain(generalized_quaternion(3));
  for (const auto& s : g_stable_subgroups(q8)) {
    EXPECT_TRUE(is_domain(sub_ggroup(q8, s)));
  }
}

TEST(QuotientGGroupTest, InducedMorphism) {
  const auto x = GGroup::identity(symmetric(3));
  const auto normals = normal_subgroups(x.carrier());
  const auto q = quotient_ggroup(x, normals[1]);
  EXPECT_EQ(q.carrier().order(), 2u);
  EXPECT_TRUE(q.morphism().is_surjective());
}

}  // namespace
}  // namespace specdec
