#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "fusionkit/catalog.hpp"
#include "fusionkit/module.hpp"

using namespace fusionkit;

namespace {

using Partition = std::vector<std::vector<int>>;

bool refines(const Partition& fine, const Partition& coarse) {
  std::vector<int> owner;
  for (int b = 0; b < static_cast<int>(coarse.size()); ++b)
    for (int j : coarse[b]) {
      if (j >= static_cast<int>(owner.size())) owner.resize(j + 1, -1);
      owner[j] = b;
    }
  for (const auto& block : fine)
    for (int j : block)
      if (owner[j] != owner[block[0]]) return false;
  return true;
}

}  // namespace

TEST(BasedModuleMake, RejectsMalformedInput) {
  EXPECT_THROW(BasedModule::make(0, 1, {}), StructuralError);
  EXPECT_THROW(BasedModule::make(2, 1, {{0, 1, 0, 1}}), StructuralError);
  EXPECT_THROW(BasedModule::make(2, 1, {{0, 0, 0, -1}}), StructuralError);
  EXPECT_THROW(BasedModule::make(2, 1, {{0, 0, 0, 1}, {0, 0, 0, 2}}), StructuralError);
  EXPECT_THROW(validate_module(fixtures::ising(), BasedModule::make(2, 1, {{0, 0, 0, 1}})), StructuralError);
}

TEST(ValidateModule, RegularModulesPass) {
  for (const auto& name : catalog_names()) {
    auto ring = catalog_entry(name).ring;
    auto m = regular_module(ring);
    EXPECT_EQ(m.module_rank(), ring.rank());
    EXPECT_TRUE(validate_module(ring, m).passed()) << name;
  }
}

// psi V_1 = V_1 redirected to V_2: d_{1,0}^1 = 0 but d_{1,1}^0 = 1.
TEST(ValidateModule, IsingRegularWithMovedEntryFailsAdjointness) {
  auto ring = fixtures::ising();
  std::vector<Entry> action;
  for (const auto& e : ring.entries())
    if (!(e.i == 1 && e.j == 0 && e.k == 1)) action.push_back(e);
  action.push_back({1, 0, 2, 1});
  auto rep = validate_module(ring, BasedModule::make(3, 3, action));
  ASSERT_TRUE(rep.violates("adjointness"));
  EXPECT_EQ(rep.find("adjointness")->witness, (std::vector<int>{1, 0, 1}));
  EXPECT_FALSE(rep.violates("unit_action"));
}

TEST(ValidateModule, UnitMustActTrivially) {
  auto ring = fixtures::cyclic(2);
  auto m = BasedModule::make(2, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}});
  auto rep = validate_module(ring, m);
  ASSERT_TRUE(rep.violates("unit_action"));
  EXPECT_EQ(rep.find("unit_action")->witness, (std::vector<int>{0, 0, 0}));
}

TEST(ValidateModule, ModuleLawFailure) {
  // g acts as the identity on a 2-element module, but g V_0 also hits V_1:
  // adjointness holds (g self-dual, symmetric) while g(gV_0) != V_0.
  auto ring = fixtures::cyclic(2);
  auto m = BasedModule::make(2, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
  auto rep = validate_module(ring, m);
  EXPECT_FALSE(rep.violates("adjointness"));
  EXPECT_TRUE(rep.violates("module_law"));
}

TEST(TrivialModule, OverZ2) {
  auto ring = fixtures::cyclic(2);
  auto hand = BasedModule::make(2, 1, {{0, 0, 0, 1}, {1, 0, 0, 1}});
  EXPECT_TRUE(validate_module(ring, hand).passed());
  auto built = trivial_module(ring, fp_dimensions(ring));
  EXPECT_EQ(built.entries(), hand.entries());
}

TEST(TrivialModule, CharacterRingsUseDegrees) {
  auto ring = character_ring("S4");
  auto m = trivial_module(ring, fp_dimensions(ring));
  EXPECT_TRUE(validate_module(ring, m).passed());
  EXPECT_EQ(m.coeff(4, 0, 0), 3);
  EXPECT_THROW(trivial_module(fixtures::ising(), fp_dimensions(fixtures::ising())), PreconditionError);
}

TEST(Decompose, Examples) {
  auto is = fixtures::ising();
  auto m = regular_module(is);
  EXPECT_EQ(decompose_over_subring(is, SubringBasis::whole(is), m), (Partition{{0, 1, 2}}));
  EXPECT_EQ(decompose_over_subring(is, adjoint_subring(is), m), (Partition{{0, 1}, {2}}));
  auto z4 = fixtures::cyclic(4);
  EXPECT_EQ(decompose_over_subring(z4, SubringBasis::checked(z4, {0, 2}), regular_module(z4)),
            (Partition{{0, 2}, {1, 3}}));
  EXPECT_EQ(decompose_over_subring(z4, SubringBasis::trivial(), regular_module(z4)),
            (Partition{{0}, {1}, {2}, {3}}));
}

TEST(Decompose, RefinesAsSubringShrinks) {
  for (const char* name : {"rep_s4", "rep_q8", "ty_z2xz2", "su2_6", "zg_d4"}) {
    auto ring = catalog_entry(name).ring;
    auto m = regular_module(ring);
    std::vector<SubringBasis> subs;
    for (unsigned mask = 0; mask < (1u << (ring.rank() - 1)); ++mask) {
      std::vector<int> idx{0};
      for (int b = 1; b < ring.rank(); ++b)
        if (mask & (1u << (b - 1))) idx.push_back(b);
      auto s = make_unchecked_subring(idx);
      if (s.is_closed_in(ring)) subs.push_back(s);
    }
    for (const auto& small : subs)
      for (const auto& big : subs)
        if (small.subset_of(big)) {
          EXPECT_TRUE(refines(decompose_over_subring(ring, small, m), decompose_over_subring(ring, big, m))) << name;
        }
  }
}

TEST(ModuleFP, RegularModuleMatchesRingDims) {
  for (const auto& name : catalog_names()) {
    auto ring = catalog_entry(name).ring;
    auto fp = fp_dimensions(ring);
    auto mfp = module_fp_data(ring, regular_module(ring), fp);
    ASSERT_EQ(mfp.components.size(), 1u) << name;
    for (int i = 0; i < ring.rank(); ++i) EXPECT_NEAR(mfp.dims[i], fp.dims[i], 1e-9 * fp.dims[i]) << name;
    EXPECT_LT(mfp.eigen_residual, 1e-8) << name;
  }
}

TEST(ModuleFP, IsingComponentMassesAreTwo) {
  auto is = fixtures::ising();
  auto mfp = module_fp_data(is, regular_module(is), fp_dimensions(is));
  EXPECT_NEAR(mfp.mass({0, 1}), 2.0, 1e-9);
  EXPECT_NEAR(mfp.mass({2}), 2.0, 1e-9);
}

TEST(ModuleFP, DecomposableModulePerComponent) {
  // two copies of the trivial Z3 module side by side
  auto ring = fixtures::cyclic(3);
  std::vector<Entry> action;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) action.push_back({i, j, j, 1});
  auto mfp = module_fp_data(ring, BasedModule::make(3, 2, action), fp_dimensions(ring));
  EXPECT_EQ(mfp.components.size(), 2u);
  EXPECT_EQ(mfp.dims, (std::vector<double>{1.0, 1.0}));
}

TEST(USet, IsingRegular) {
  auto is = fixtures::ising();
  auto u = uset_action(is, regular_module(is));
  EXPECT_EQ(u.components, (Partition{{0, 1}, {2}}));
  EXPECT_EQ(u.act(1, 0), 1);
  EXPECT_EQ(u.act(1, 1), 0);
  EXPECT_TRUE(u.transitive);
  EXPECT_NEAR(u.component_masses[0], u.component_masses[1], 1e-9);
}

TEST(USet, GroupRingActsRegularly) {
  auto g = symmetric_group(3);
  auto ring = group_ring(g);
  auto u = uset_action(ring, regular_module(ring));
  EXPECT_EQ(u.num_components(), 6);
  EXPECT_TRUE(isomorphic(u.universal.group, g));
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x) EXPECT_EQ(u.act(a, x), u.universal.group.mul(a, x));
}

TEST(USet, RegularModuleIsTheRegularAction) {
  for (const auto& name : catalog_names()) {
    auto ring = catalog_entry(name).ring;
    auto u = uset_action(ring, regular_module(ring));
    EXPECT_EQ(u.components, u.universal.components) << name;
    for (int a = 0; a < u.universal.num_blocks(); ++a)
      for (int x = 0; x < u.num_components(); ++x)
        EXPECT_EQ(u.act(a, x), u.universal.group.mul(a, x)) << name;
  }
}

TEST(USet, TrivialModuleHasOneComponent) {
  auto ring = character_ring("Q8");
  auto u = uset_action(ring, trivial_module(ring, fp_dimensions(ring)));
  EXPECT_EQ(u.num_components(), 1);
  for (int a = 0; a < u.universal.num_blocks(); ++a) EXPECT_EQ(u.act(a, 0), 0);
}

TEST(USet, RequiresIndecomposable) {
  auto ring = fixtures::cyclic(3);
  std::vector<Entry> action;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) action.push_back({i, j, j, 1});
  EXPECT_THROW(uset_action(ring, BasedModule::make(3, 2, action)), PreconditionError);
}

TEST(Divisibility, IsingRegular) {
  auto is = fixtures::ising();
  auto fp = fp_dimensions(is);
  auto rep = divisibility_report(is, regular_module(is), fp, module_fp_data(is, regular_module(is), fp));
  EXPECT_FALSE(rep.advisory);
  EXPECT_NEAR(rep.adjoint_dim, 2.0, 1e-9);
  EXPECT_NEAR(rep.ring_ratios[2].ratio, 1.0, 1e-9);
  EXPECT_NEAR(rep.module_ratios[2].module_ratio, 2.0, 1e-9);
  EXPECT_NEAR(rep.module_ratios[2].component_ratio, 1.0, 1e-9);
  EXPECT_TRUE(rep.all_integer());
}

TEST(Divisibility, RepQ8) {
  auto ring = character_ring("Q8");
  auto fp = fp_dimensions(ring);
  auto m = regular_module(ring);
  auto rep = divisibility_report(ring, m, fp, module_fp_data(ring, m, fp));
  EXPECT_NEAR(rep.adjoint_dim, 4.0, 1e-9);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(rep.ring_ratios[i].ratio, 4.0, 1e-9);
  EXPECT_NEAR(rep.ring_ratios[4].ratio, 1.0, 1e-9);
  EXPECT_TRUE(rep.all_integer());
}

TEST(Divisibility, GroupRingGivesGroupOrder) {
  auto ring = group_ring(quaternion_group());
  auto fp = fp_dimensions(ring);
  auto m = regular_module(ring);
  auto rep = divisibility_report(ring, m, fp, module_fp_data(ring, m, fp));
  for (const auto& r : rep.module_ratios) EXPECT_NEAR(r.module_ratio, 8.0, 1e-9);
  EXPECT_TRUE(rep.all_integer());
}

TEST(Divisibility, NonNilpotentIsAdvisory) {
  auto fib = fixtures::fibonacci();
  auto fp = fp_dimensions(fib);
  auto m = regular_module(fib);
  auto rep = divisibility_report(fib, m, fp, module_fp_data(fib, m, fp));
  EXPECT_TRUE(rep.advisory);
  EXPECT_FALSE(rep.all_integer());
}

TEST(Divisibility, NilpotentCatalogIsIntegral) {
  for (const auto& name : catalog_names()) {
    auto ring = catalog_entry(name).ring;
    if (!nilpotency_class(ring)) continue;
    auto fp = fp_dimensions(ring);
    auto m = regular_module(ring);
    auto rep = divisibility_report(ring, m, fp, module_fp_data(ring, m, fp));
    EXPECT_TRUE(rep.all_integer()) << name;
  }
}

TEST(NearPositiveInteger, Relative) {
  EXPECT_TRUE(near_positive_integer_relative(3.0 + 1e-8));
  EXPECT_FALSE(near_positive_integer_relative(3.001));
  EXPECT_FALSE(near_positive_integer_relative(0.0));
  EXPECT_TRUE(near_positive_integer_relative(1e6 + 0.05));
}
