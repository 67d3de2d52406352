#include <gtest/gtest.h>

#include "veronormal/properties.hpp"

using namespace veronormal;

namespace {

void expect_clean(const PropertyResult& r, int count) {
  EXPECT_EQ(r.instances, count) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Property, EulerIdentity) { expect_clean(check_euler_identity(200, 1), 200); }
TEST(Property, SubstitutionHomomorphism) { expect_clean(check_substitution_homomorphism(100, 2), 100); }
TEST(Property, StratumFunctoriality) { expect_clean(check_stratum_functoriality(100, 3), 100); }
TEST(Property, PullbackCompose) { expect_clean(check_pullback_compose(100, 4), 100); }
TEST(Property, H0Oracle) { expect_clean(check_h0_oracle(60, 5), 60); }
TEST(Property, DegreeConservation) { expect_clean(check_degree_conservation(60, 6), 60); }

TEST(Property, SeedsReproduce) {
  SplitMix64 a(42), b(42);
  std::string la, lb;
  const GradedMap fa = random_bundle_presentation(a, la);
  const GradedMap fb = random_bundle_presentation(b, lb);
  EXPECT_EQ(la, lb);
  EXPECT_EQ(fa, fb);
}

TEST(SplitMix, ReferenceValues) {
  // First outputs for seed 0 from the reference generator.
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(g.next(), 0x06C45D188009454FULL);
}
