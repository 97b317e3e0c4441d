#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "fusionkit/catalog.hpp"
#include "fusionkit/perron.hpp"

using namespace fusionkit;

TEST(FPDimensions, GroupRingsHaveUnitDims) {
  for (auto g : {cyclic_group(5), symmetric_group(3), quaternion_group()}) {
    auto fp = fp_dimensions(group_ring(g));
    for (double d : fp.dims) EXPECT_NEAR(d, 1.0, 1e-12);
    EXPECT_NEAR(fp.ring_dim, g.order(), 1e-9);
    EXPECT_TRUE(fp.all_integer());
  }
}

TEST(FPDimensions, Ising) {
  auto fp = fp_dimensions(fixtures::ising());
  EXPECT_NEAR(fp.dims[0], 1.0, 1e-9);
  EXPECT_NEAR(fp.dims[1], 1.0, 1e-9);
  EXPECT_NEAR(fp.dims[2], std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(fp.ring_dim, 4.0, 1e-9);
  EXPECT_FALSE(fp.integer_flags[2]);
  EXPECT_TRUE(fp.sq_integer_flags[2]);
  ASSERT_TRUE(fp.exactness_consistent.has_value());
  EXPECT_TRUE(*fp.exactness_consistent);
}

TEST(FPDimensions, Fibonacci) {
  auto fp = fp_dimensions(fixtures::fibonacci());
  EXPECT_NEAR(fp.dims[1], 1.6180339887498949, 1e-9);
  EXPECT_NEAR(fp.ring_dim, (5 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_FALSE(fp.sq_integer_flags[1]);
  EXPECT_FALSE(fp.exactness_consistent.has_value());
}

TEST(FPDimensions, CharacterRingDimsAreIrrepDegrees) {
  auto fp = fp_dimensions(character_ring("Z7:Z3"));
  const std::vector<double> want = {1, 1, 1, 3, 3};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(fp.dims[i], want[i], 1e-9);
  EXPECT_NEAR(fp.ring_dim, 21, 1e-9);
  auto s4 = fp_dimensions(character_ring("S4"));
  EXPECT_NEAR(s4.ring_dim, 24, 1e-9);
}

TEST(FPDimensions, SU2DimsAreQuantumIntegers) {
  for (int k = 1; k <= 8; ++k) {
    auto fp = fp_dimensions(su2_fusion_ring(k));
    for (int a = 0; a <= k; ++a) {
      const double q = std::sin(std::numbers::pi * (a + 1) / (k + 2)) / std::sin(std::numbers::pi / (k + 2));
      EXPECT_NEAR(fp.dims[a], q, 1e-9) << "k=" << k << " a=" << a;
    }
  }
}

TEST(FPDimensions, InvariantsOnCatalog) {
  for (const auto& name : catalog_names()) {
    auto ring = catalog_entry(name).ring;
    auto fp = fp_dimensions(ring);
    EXPECT_LT(fp.homomorphism_residual, 1e-8) << name;
    EXPECT_NEAR(fp.dims[0], 1.0, 1e-12) << name;
    double sum = 0;
    for (int i = 0; i < ring.rank(); ++i) {
      EXPECT_GE(fp.dims[i], 1.0 - 1e-9) << name;
      EXPECT_NEAR(fp.dims[i], fp.dims[ring.dual(i)], 1e-9) << name;
      sum += fp.dims[i] * fp.dims[i];
    }
    EXPECT_NEAR(sum, fp.ring_dim, 1e-9) << name;
    for (int i : invertible_basics(ring)) EXPECT_NEAR(fp.dims[i], 1.0, 1e-9) << name;
  }
}

TEST(FPDimensions, RejectsBadTolerance) {
  EXPECT_THROW(fp_dimensions(fixtures::ising(), 0.0), PreconditionError);
}

TEST(PerronVector, ReportsNonConvergence) {
  // a Jordan block: iterates approach (1, 0) only like 1/n
  DenseMatrix m(2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  DenseMatrix upper(2);
  upper(0, 0) = 1;
  upper(0, 1) = 1;
  upper(1, 1) = 1;
  try {
    perron_vector(upper, 1e-12, 50);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.iterations(), 50);
    EXPECT_GT(e.residual(), 0.0);
  }
  // the all-ones start is already fixed by the swap
  EXPECT_NO_THROW(perron_vector(m, 1e-9, 10));
}

TEST(PerronVector, TiesBrokenByLowestIndex) {
  // Z[Z3]: uniform Perron vector, every argmax candidate ties
  auto fp = fp_dimensions(fixtures::cyclic(3));
  for (double d : fp.dims) EXPECT_DOUBLE_EQ(d, 1.0);
}
