#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bcktop;
using oracle::set;

namespace {

const BckModule& m2() {
  static const BckModule m = oracle::cyclic_module(2);
  return m;
}
const BckModule& m4() {
  static const BckModule m = oracle::cyclic_module(4);
  return m;
}

ModuleHom mod2() { return ModuleHom::from_map(m4(), m2(), {0, 1, 0, 1}); }

}  // namespace

TEST(Group, CyclicAndKlein) {
  const auto z4 = AbelianGroup::cyclic(4);
  EXPECT_EQ(z4.add(3, 2), 1u);
  EXPECT_EQ(z4.neg(1), 3u);
  const auto k = AbelianGroup::klein();
  for (Index a = 0; a < 4; ++a) EXPECT_EQ(k.add(a, a), 0u);
  EXPECT_EQ(k.add(1, 2), 3u);
}

TEST(Group, RejectsNonGroups) {
  EXPECT_THROW(AbelianGroup::from_table({{0, 1}, {1, 1}}), ModuleAxiomViolation);
  EXPECT_THROW(AbelianGroup::from_table({{1, 0}, {0, 1}}), ModuleAxiomViolation);
  EXPECT_THROW(AbelianGroup::from_table({{0, 1}, {1}}), MalformedTable);
  // The non-abelian case needs at least 6 elements: S3.
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Table s3(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      s3[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  try {
    AbelianGroup::from_table(s3);
    FAIL();
  } catch (const ModuleAxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "commutativity");
  }
}

TEST(Module, Z4OverTwoChain) {
  const auto alg = chain_algebra(2);
  EXPECT_NO_THROW(module_from_tables(alg, AbelianGroup::cyclic(4), {{0, 0, 0, 0}, {0, 1, 2, 3}}));
  try {
    module_from_tables(alg, AbelianGroup::cyclic(4), {{0, 0, 0, 0}, {0, 0, 0, 0}});
    FAIL();
  } catch (const ModuleAxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "M4");
    EXPECT_EQ(e.witnesses(), std::vector<Index>{1});
  }
}

TEST(Module, TrivialAlgebraForcesTrivialModule) {
  const auto trivial = chain_algebra(1);
  EXPECT_NO_THROW(module_from_tables(trivial, AbelianGroup::cyclic(1), {{0}}));
  EXPECT_THROW(module_from_tables(trivial, AbelianGroup::cyclic(2), {{0, 0}}), ModuleAxiomViolation);
}

TEST(Module, ActionShapeChecked) {
  EXPECT_THROW(module_from_tables(chain_algebra(2), AbelianGroup::cyclic(2), {{0, 0}}), MalformedTable);
  EXPECT_THROW(module_from_tables(chain_algebra(2), AbelianGroup::cyclic(2), {{0, 0}, {0, 2}}), MalformedTable);
}

TEST(Module, ScalarModulesValidate) {
  for (const auto& g : {AbelianGroup::cyclic(1), AbelianGroup::cyclic(2), AbelianGroup::cyclic(4), AbelianGroup::klein()}) {
    const auto m = scalar_module_over_c2(g);
    EXPECT_EQ(m.size(), g.size());
    EXPECT_FALSE(find_module_violation(m.algebra(), m.group(), m.action_table()));
  }
}

TEST(Module, SelfModule) {
  const auto x = self_module(chain_algebra(2));
  EXPECT_EQ(x.group().table(), (Table{{0, 1}, {1, 0}}));
  EXPECT_EQ(x.action_table(), (Table{{0, 0}, {0, 1}}));
  EXPECT_THROW(self_module(chain_algebra(4)), NotBoundedImplicative);
  EXPECT_EQ(self_module(chain_algebra(1)).size(), 1u);
}

TEST(Module, SelfModuleOverBooleanSquare) {
  // 2 x 2 Boolean algebra as a BCK-algebra: a*b = a and not b on bitmasks.
  Table star(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) star[a][b] = a & ~b & 3;
  const auto alg = BckAlgebra::from_table(star);
  ASSERT_TRUE(is_implicative(alg));
  const auto x = self_module(alg);
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      EXPECT_EQ(x.add(a, b), a ^ b);
      EXPECT_EQ(x.act(a, b), a & b);
    }
}

TEST(Submodules, Examples) {
  auto as_sets = [](const std::vector<Submodule>& subs) {
    std::vector<std::vector<Index>> out;
    for (const auto& s : subs) out.push_back(s.elements().elements());
    return out;
  };
  EXPECT_EQ(as_sets(enumerate_submodules(m4())), (std::vector<std::vector<Index>>{{0}, {0, 2}, {0, 1, 2, 3}}));
  EXPECT_EQ(as_sets(enumerate_submodules(m2())), (std::vector<std::vector<Index>>{{0}, {0, 1}}));
  EXPECT_EQ(as_sets(enumerate_submodules(oracle::cyclic_module(1))), (std::vector<std::vector<Index>>{{0}}));
  EXPECT_THROW(Submodule::of(m4(), set(4, {0, 1})), NotASubmodule);
}

TEST(Submodules, MatchSubsetFilterOracle) {
  for (const auto& [name, m] : oracle::corpus_modules()) {
    const auto subs = enumerate_submodules(m);
    EXPECT_EQ(oracle::mask_set([&] {
                std::vector<ElementSet> v;
                for (const auto& s : subs) v.push_back(s.elements());
                return v;
              }()),
              oracle::submodules(m))
        << name;
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end())) << name;
  }
}

TEST(Submodules, KleinHasThreeLines) {
  const auto k = scalar_module_over_c2(AbelianGroup::klein());
  EXPECT_EQ(enumerate_submodules(k).size(), 5u);
}

TEST(Submodules, ActionCanShrinkTheLattice) {
  // Over the 3-chain, 1 acts on Z2 x Z2 by projecting onto the first factor.
  Table project = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 2, 3}};
  const auto m = module_from_tables(chain_algebra(3), AbelianGroup::klein(), project);
  // {0,2} is closed, {0,3} is not (1.3 = 1).
  EXPECT_TRUE(is_submodule(m, set(4, {0, 2})));
  EXPECT_FALSE(is_submodule(m, set(4, {0, 3})));
  EXPECT_EQ(oracle::submodules(m).size(), enumerate_submodules(m).size());
}

TEST(Homs, KernelImageExamples) {
  EXPECT_EQ(kernel(mod2()).elements(), set(4, {0, 2}));
  EXPECT_EQ(image(mod2()).elements(), set(2, {0, 1}));
  const auto id = ModuleHom::from_map(m4(), m4(), {0, 1, 2, 3});
  EXPECT_EQ(kernel(id).elements(), set(4, {0}));
  EXPECT_EQ(image(id).size(), 4u);
  const auto zero = ModuleHom::from_map(m4(), m4(), {0, 0, 0, 0});
  EXPECT_EQ(kernel(zero).size(), 4u);
  EXPECT_EQ(image(zero).elements(), set(4, {0}));
}

TEST(Homs, RejectsNonHoms) {
  try {
    ModuleHom::from_map(m4(), m2(), {0, 1, 1, 0});
    FAIL();
  } catch (const ModuleAxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "additive");
  }
  EXPECT_THROW(ModuleHom::from_map(m4(), m2(), {0, 1}), MalformedTable);
  EXPECT_THROW(ModuleHom::from_map(m4(), m2(), {0, 2, 0, 2}), MalformedTable);
}

TEST(Homs, CountExamples) {
  EXPECT_EQ(enumerate_homs(m2(), m2()).size(), 2u);
  EXPECT_EQ(enumerate_homs(m4(), m2()).size(), 2u);
  EXPECT_EQ(enumerate_homs(m2(), m4()).size(), 2u);
}

TEST(Homs, EnumerationMatchesBruteForce) {
  const auto mods = oracle::corpus_modules();
  for (const auto& a : mods)
    for (const auto& b : mods) {
      std::vector<std::vector<Index>> got;
      for (const auto& f : enumerate_homs(a.module, b.module)) got.push_back(f.map());
      EXPECT_EQ(got, oracle::homs(a.module, b.module)) << a.name << "->" << b.name;
    }
}

TEST(Homs, FirstIsomorphismShape) {
  const auto mods = oracle::corpus_modules();
  for (const auto& a : mods)
    for (const auto& b : mods)
      for (const auto& f : enumerate_homs(a.module, b.module)) {
        EXPECT_EQ(image(f).size() * kernel(f).size(), a.module.size());
        EXPECT_TRUE(is_submodule(a.module, kernel(f).elements()));
        EXPECT_TRUE(is_submodule(b.module, image(f).elements()));
      }
}

TEST(Homs, CosetImage) {
  const auto k = Submodule::of(m4(), set(4, {0, 2}));
  EXPECT_EQ(hom_coset_image(mod2(), k, 1), set(2, {1}));
  EXPECT_EQ(hom_coset_image(mod2(), k, 0), mod2().image_of(k.elements()));
  const auto zero = ModuleHom::from_map(m4(), m2(), {0, 0, 0, 0});
  for (Index m = 0; m < 4; ++m) EXPECT_EQ(hom_coset_image(zero, k, m), set(2, {0}));
}

TEST(Quotients, Examples) {
  const auto half = quotient(m4(), Submodule::of(m4(), set(4, {0, 2})));
  EXPECT_EQ(half.size(), 2u);
  EXPECT_EQ(half.module().group().table(), (Table{{0, 1}, {1, 0}}));
  EXPECT_EQ(half.class_of(3), 1u);
  EXPECT_EQ(half.representative(1), 1u);
  EXPECT_EQ(half.coset_elements(1), set(4, {1, 3}));

  const auto same = quotient(m4(), Submodule::zero(m4()));
  EXPECT_EQ(same.module().group().table(), m4().group().table());
  EXPECT_EQ(same.module().action_table(), m4().action_table());

  EXPECT_EQ(quotient(m4(), Submodule::whole(m4())).size(), 1u);
}

TEST(Quotients, CosetsPartitionAndActionIsWellDefined) {
  for (const auto& [name, m] : oracle::corpus_modules())
    for (const auto& n : enumerate_submodules(m)) {
      const auto q = quotient(m, n);
      EXPECT_EQ(q.size() * n.size(), m.size()) << name;
      for (Index a = 0; a < m.size(); ++a) {
        const auto members = q.coset_elements(q.class_of(a)).elements();
        EXPECT_EQ(q.representative(q.class_of(a)), members.front());
        for (Index b = 0; b < m.size(); ++b)
          if (q.class_of(a) == q.class_of(b))
            for (Index x = 0; x < m.algebra().size(); ++x)
              EXPECT_EQ(q.class_of(m.act(x, a)), q.class_of(m.act(x, b))) << name;
      }
    }
}

TEST(Restrict, LocalIndexing) {
  const auto k = Submodule::of(m4(), set(4, {0, 2}));
  const auto r = restrict_module(m4(), k);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.group().table(), (Table{{0, 1}, {1, 0}}));
}

TEST(SetHelpers, SumsAndIntersections) {
  const auto k = Submodule::of(m4(), set(4, {0, 2}));
  EXPECT_EQ(coset(m4(), 1, k.elements()), set(4, {1, 3}));
  EXPECT_EQ(set_sum(m4(), set(4, {1}), set(4, {0, 2})), set(4, {1, 3}));
  EXPECT_EQ(sum(m4(), k, Submodule::zero(m4())), k);
  EXPECT_EQ(intersection(m4(), k, Submodule::whole(m4())), k);
}
