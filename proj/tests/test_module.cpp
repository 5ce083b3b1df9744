#include <gtest/gtest.h>

#include "common.hpp"
#include "modend/module.hpp"
#include "modend/theorems.hpp"

using namespace modend;
using namespace modend::testing;

namespace {

/// n_{X,i}^j for every triple, as a flat list, for comparing action tables.
std::vector<bool> action_table(const ModuleCategory& M) {
  std::vector<bool> out;
  for (int x = 0; x < M.base->rank(); ++x)
    for (int i = 0; i < M.rank(); ++i)
      for (int j = 0; j < M.rank(); ++j) out.push_back(M.n(x, i, j));
  return out;
}

}  // namespace

TEST(ModuleCategory, BundledModulesValidate) {
  for (const auto& [name, M] : corpus().modules) {
    auto rep = validate_module(*M);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(ModuleCategory, AnyNonzeroLSymbolOnVecOverZ2IsValid) {
  // With one module simple the pentagon at (s,s,s) has the same factor on both sides.
  ModuleCategory M = *mod("vec_over_vec_z2");
  const auto& C = *M.base;
  int s = C.label("s"), e = C.unit, m = 0;
  M.L_ref(s, s, m, m, e, m) = -M.L(s, s, m, m, e, m);
  EXPECT_TRUE(validate_module(M).ok());
  M.L_ref(s, s, m, m, e, m) = M.field()->from_rational(Rational(3, 7));
  EXPECT_TRUE(validate_module(M).ok());
}

TEST(ModuleCategory, NegatedLSymbolOnFibIsLocated) {
  ModuleCategory M = *mod("fib_regular");
  int t = M.label("tau");
  M.L_ref(t, t, t, t, t, t) = -M.L(t, t, t, t, t, t);
  auto rep = validate_module(M);
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("tau"), std::string::npos) << rep.violations.front();
}

TEST(RegularModule, CopiesFusionRules) {
  for (const auto& n : category_names()) {
    auto C = cat(n);
    ModuleCategory R = regular_module(C);
    EXPECT_EQ(R.rank(), C->rank());
    for (int x = 0; x < C->rank(); ++x)
      for (int i = 0; i < C->rank(); ++i)
        for (int j = 0; j < C->rank(); ++j) EXPECT_EQ(R.n(x, i, j), C->N(x, i, j));
    EXPECT_TRUE(validate_module(R).ok()) << n;
  }
  auto F = cat("fib");
  ModuleCategory R = regular_module(F);
  int t = F->label("tau");
  EXPECT_TRUE(R.n(t, t, F->unit));
  EXPECT_TRUE(R.n(t, t, t));
  EXPECT_EQ(regular_module(cat("ising")).rank(), 3);
}

TEST(OppositeModule, Z2LabelsUnchanged) {
  const auto& M = *mod("vec_z2_regular");
  ModuleCategory Op = opposite_module(M);
  EXPECT_TRUE(Op.right);
  EXPECT_EQ(action_table(Op), action_table(M));
  EXPECT_TRUE(validate_module(Op).ok());
}

TEST(OppositeModule, Z4UsesDualLabels) {
  const auto& M = *mod("vec_z4_regular");
  const auto& C = *M.base;
  ModuleCategory Op = opposite_module(M);
  int one = C.label("1"), three = C.label("3");
  for (int i = 0; i < M.rank(); ++i)
    for (int j = 0; j < M.rank(); ++j) EXPECT_EQ(Op.n(one, i, j), M.n(three, i, j));
}

TEST(OppositeModule, EveryBundledOppositeIsAValidRightModule) {
  for (const auto& [name, M] : corpus().modules) {
    ModuleCategory Op = opposite_module(*M);
    auto rep = validate_module(Op);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(OppositeModule, DoubleOppositeRecoversActionAndValidates) {
  for (const auto& [name, M] : corpus().modules) {
    ModuleCategory OpOp = opposite_module(opposite_module(*M));
    EXPECT_FALSE(OpOp.right);
    EXPECT_EQ(action_table(OpOp), action_table(*M)) << name;
    auto rep = validate_module(OpOp);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.violations.front());
    for (int i = 0; i < M->rank(); ++i) EXPECT_EQ(OpOp.unit_scalars[i], M->unit_scalars[i]);
  }
}

TEST(InternalHom, Examples) {
  const auto& Z = *mod("vec_z2_regular");
  auto H = internal_hom(Z);
  EXPECT_EQ(H(Z.label("s"), Z.label("e")), (std::vector<int>{0, 1}));
  const auto& F = *mod("fib_regular");
  auto HF = internal_hom(F);
  int t = F.label("tau");
  EXPECT_EQ(HF(t, t), (std::vector<int>{1, 1}));
}

TEST(InternalHom, MultiplicitiesMatchActionAndContainUnit) {
  for (const auto& [name, M] : corpus().modules) {
    auto H = internal_hom(*M);
    const auto& C = *M->base;
    for (int i = 0; i < M->rank(); ++i) {
      EXPECT_EQ(H(i, i)[C.unit], 1) << name;
      for (int j = 0; j < M->rank(); ++j)
        for (int x = 0; x < C.rank(); ++x) EXPECT_EQ(H(i, j)[x], M->n(x, i, j) ? 1 : 0);
    }
  }
}

TEST(InternalHom, AdjunctionBijectionsAreMutuallyInverse) {
  for (const auto& [name, M] : corpus().modules) {
    auto rep = check_internal_hom_adjunction(*M);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(RestrictModule, Z4ToEvenSubgroup) {
  const auto& M = *mod("vec_z4_regular");
  const auto& C = *M.base;
  ModuleCategory R = restrict_module(M, {C.label("0"), C.label("2")});
  EXPECT_EQ(R.base->rank(), 2);
  EXPECT_EQ(R.rank(), 4);
  EXPECT_TRUE(validate_fusion(*R.base).ok());
  EXPECT_TRUE(validate_module(R).ok());
}

TEST(RestrictModule, ToUnitOnly) {
  for (const auto& n : regular_names()) {
    const auto& M = *mod(n);
    ModuleCategory R = restrict_module(M, {M.base->unit});
    EXPECT_EQ(R.base->rank(), 1);
    EXPECT_TRUE(validate_module(R).ok()) << n;
  }
}

TEST(RestrictModule, IsingToOnePsi) {
  const auto& M = *mod("ising_regular");
  const auto& C = *M.base;
  ModuleCategory R = restrict_module(M, {C.unit, C.label("psi")});
  EXPECT_EQ(R.rank(), 3);
  EXPECT_EQ(R.base->rank(), 2);
  EXPECT_TRUE(validate_module(R).ok());
}

TEST(RestrictModule, RejectsNonSubcategories) {
  const auto& M = *mod("ising_regular");
  const auto& C = *M.base;
  auto expect_kind = [&](std::vector<int> sub) {
    try {
      restrict_module(M, sub);
      FAIL() << "expected NotATensorSubcategory";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotATensorSubcategory);
    }
  };
  expect_kind({C.unit, C.label("sigma")});
  expect_kind({C.label("psi")});
  const auto& Z = *mod("vec_z4_regular");
  try {
    restrict_module(Z, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotATensorSubcategory);
  }
}

TEST(HomLemmas, BundledModulesPass) {
  for (const auto& [name, M] : corpus().modules) {
    auto rep = hom_lemma_suite(*M);
    EXPECT_TRUE(rep.ok()) << name << ": " << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(HomLemmas, CorruptedActionTableIsLocated) {
  const auto& C = cat("vec_z4");
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) triples.push_back({a, b, (a + b) % 4});
  triples.push_back({1, 0, 2});  // 1▷0 now also contains 2
  ModuleCategory M = ModuleCategory::make("bad", C, C->simples, false, triples);
  auto rep = hom_lemma_suite(M);
  ASSERT_FALSE(rep.ok());
  bool located = false;
  for (const auto& v : rep.violations) located = located || v.find("(1,0,") != std::string::npos;
  EXPECT_TRUE(located) << rep.violations.front();
}
