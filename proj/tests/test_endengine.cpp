#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "modend/endengine.hpp"
#include "modend/gauge.hpp"
#include "modend/suite.hpp"

using namespace modend;
using namespace modend::testing;

namespace {

/// Dimension of {λ : λ_i = Σ_j n_{X*,i}^j λ_j for all simple X, i}: functionals on End(m_i) compatible with
/// the coend relations of Hom(Id-, Id-), computed from the action table alone.
// Functions λ on module simples with d_X λ_i = Σ_j λ_j over X*▷m_i, where d_X = 1/F(X, X*, X, X; 1, 1).
size_t dimension_function_oracle(const ModuleCategory& M) {
  const auto& C = *M.base;
  const auto& k = C.field;
  const int n = M.rank();
  Matrix A(k, 0, n);
  for (int x = 0; x < C.rank(); ++x) {
    FieldElement d = C.F(x, C.dual[x], x, x, C.unit, C.unit).inverse();
    for (int i = 0; i < n; ++i) {
      Matrix row(k, 1, n);
      row(0, i) = row(0, i) + d;
      for (int j : M.act(C.dual[x], i)) row(0, j) = row(0, j) - k->one();
      A = A.rows() == 0 ? row : A.vstack(row);
    }
  }
  return nullspace(A).size();
}

std::vector<std::pair<FunctorPtr, FunctorPtr>> pairs_on(const std::string& module) {
  std::vector<std::pair<FunctorPtr, FunctorPtr>> out;
  auto M = mod(module);
  auto fs = detail::endofunctors(corpus(), M);
  for (const auto& F : fs)
    for (const auto& G : fs) out.emplace_back(F, G);
  return out;
}

}  // namespace

TEST(NatSystem, IdentityOnZ2) {
  auto R = mod("vec_z2_regular");
  auto id = fun("vec_z2_regular", "id");
  DinaturalSystem sys = build_nat_system(*id, *id);
  EXPECT_EQ(sys.dim(), 2u);
  EXPECT_EQ(sys.conditions.size(), 4u);
  for (const auto& c : sys.conditions)
    if (c.x == R->base->unit) EXPECT_TRUE(c.map.is_zero());
  EXPECT_EQ(solve_end(sys).dim, 1u);
  EXPECT_EQ(solve_end(ordinary(sys)).dim, 2u);
}

TEST(NatSystem, DisjointImagesGiveEmptyCarrier) {
  DinaturalSystem sys = build_nat_system(*fun("vec_z2_regular", "right_e"), *fun("vec_z2_regular", "right_s"));
  EXPECT_EQ(sys.dim(), 0u);
  EXPECT_EQ(solve_end(sys).dim, 0u);
}

TEST(NatSystem, CarrierAndDimensionExamples) {
  auto id = fun("fib_regular", "id");
  EXPECT_EQ(build_nat_system(*id, *id).dim(), 2u);
  auto s = fun("vec_z2_omega_regular", "right_s");
  EXPECT_EQ(solve_end(build_nat_system(*s, *s)).dim, 1u);
  auto t = fun("fib_regular", "right_tau");
  EXPECT_EQ(solve_end(build_nat_system(*t, *t)).dim, 1u);
  EXPECT_THROW(build_nat_system(*id, *fun("vec_z2_regular", "id")), Error);
}

TEST(NatSystem, SolutionsAreExactlyTheOracleSubspace) {
  for (const auto& n : regular_names())
    for (const auto& [F, G] : pairs_on(n)) {
      auto e = solve_end(build_nat_system(*F, *G));
      auto o = solve_end(build_nat_oracle_system(*F, *G));
      EXPECT_TRUE(subspace_equal(F->field(), detail::hom_carrier(*F, *G).dim, e.basis, o.basis))
          << n << " " << F->name << "," << G->name;
    }
}

TEST(HomCoend, Z2IdentityIsOneDimensional) {
  auto id = fun("vec_z2_regular", "id");
  DinaturalSystem sys = build_hom_coend_system(*id, *id);
  EXPECT_EQ(solve_coend(sys).dim, 1u);
  EXPECT_EQ(solve_coend(ordinary(sys)).dim, sys.dim());
}

TEST(HomCoend, IdentityMatchesDimensionFunctionOracle) {
  // A dimension function is unique up to scale on every regular module.
  std::map<std::string, size_t> expected{{"vec_z2_regular", 1}, {"vec_z2_omega_regular", 1}, {"vec_z4_regular", 1},
                                         {"fib_regular", 1},    {"ising_regular", 1}};
  for (const auto& n : regular_names()) {
    auto id = fun(n, "id");
    size_t oracle = dimension_function_oracle(*mod(n));
    EXPECT_EQ(oracle, expected[n]) << n;
    EXPECT_EQ(solve_coend(build_hom_coend_system(*id, *id)).dim, oracle) << n;
  }
}

TEST(HomCoend, RelationsSpanTheConditionRows) {
  for (const auto& n : regular_names())
    for (const auto& [F, G] : pairs_on(n)) {
      DinaturalSystem sys = build_hom_coend_system(*F, *G);
      EndResult r = solve_coend(sys);
      EXPECT_EQ(r.relations.rows() + r.dim, sys.dim());
    }
}

TEST(Restriction, UnitOnlyIsTheOrdinaryEnd) {
  for (const auto& n : regular_names())
    for (const auto& [F, G] : pairs_on(n)) {
      DinaturalSystem sys = build_nat_system(*F, *G);
      DinaturalSystem u = restrict_conditions(sys, {sys.base->unit});
      for (const auto& c : u.conditions) EXPECT_TRUE(c.map.is_zero());
      EXPECT_EQ(solve_end(u).dim, solve_end(ordinary(sys)).dim);
    }
}

TEST(Restriction, FullSetIsIdentical) {
  auto id = fun("ising_regular", "id");
  DinaturalSystem sys = build_nat_system(*id, *id);
  std::vector<int> all{0, 1, 2};
  EXPECT_EQ(restrict_conditions(sys, all).stacked(), sys.stacked());
  EXPECT_THROW(restrict_conditions(sys, {0, 1}), Error);
}

TEST(Restriction, MonotoneOnZ4WithStrictIdentityCase) {
  auto M = mod("vec_z4_regular");
  const auto& C = *M->base;
  std::vector<int> D{C.label("0"), C.label("2")}, U{C.label("0")};
  for (const auto& [F, G] : pairs_on("vec_z4_regular")) {
    DinaturalSystem e = build_nat_system(*F, *G), c = build_hom_coend_system(*F, *G);
    size_t eC = solve_end(e).dim, eD = solve_end(restrict_conditions(e, D)).dim, eU = solve_end(restrict_conditions(e, U)).dim;
    EXPECT_LE(eC, eD);
    EXPECT_LE(eD, eU);
    size_t cC = solve_coend(c).dim, cD = solve_coend(restrict_conditions(c, D)).dim,
           cU = solve_coend(restrict_conditions(c, U)).dim;
    EXPECT_LE(cC, cD);
    EXPECT_LE(cD, cU);
  }
  auto id = fun("vec_z4_regular", "id");
  DinaturalSystem e = build_nat_system(*id, *id);
  EXPECT_EQ(solve_end(e).dim, 1u);
  EXPECT_EQ(solve_end(restrict_conditions(e, D)).dim, 2u);
  EXPECT_EQ(solve_end(ordinary(e)).dim, 4u);
}

TEST(Restriction, EndOfRestrictedModuleMatchesRestrictedConditions) {
  // Restricting the module and rebuilding gives the same dimension as dropping conditions.
  auto M = mod("vec_z4_regular");
  const auto& C = *M->base;
  std::vector<int> D{C.label("0"), C.label("2")};
  auto R = std::make_shared<const ModuleCategory>(restrict_module(*M, D));
  ModuleFunctor I = identity_functor(R);
  EXPECT_EQ(solve_end(build_nat_system(I, I)).dim,
            solve_end(restrict_conditions(build_nat_system(*fun("vec_z4_regular", "id"), *fun("vec_z4_regular", "id")), D)).dim);
}

class VecCoincidence : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(VecCoincidence, FiftyRandomSystems) {
  auto r = criterion_vec(GetParam());
  EXPECT_TRUE(r.pass) << r.detail.dump();
  EXPECT_EQ(r.detail["systems"], 50);
}

INSTANTIATE_TEST_SUITE_P(Seeds, VecCoincidence, ::testing::Values(1u, 2u, 3u));

TEST(CompositeConditions, NeverShrinkTheSolutionSpace) {
  std::mt19937 rng(17);
  for (const auto& [name, M] : corpus().modules) {
    std::vector<FunctorPtr> fs;
    for (const auto& [k, f] : corpus().functors)
      if (f->src == M) fs.push_back(f);
    const auto& C = *M->base;
    for (int trial = 0; trial < 20; ++trial) {
      const auto& F = fs[rng() % fs.size()];
      std::vector<FunctorPtr> gs;
      for (const auto& g : fs)
        if (g->dst == F->dst) gs.push_back(g);
      const auto& G = gs[rng() % gs.size()];
      int x = static_cast<int>(rng() % C.rank()), y = static_cast<int>(rng() % C.rank());
      // Both X⊗Y and the direct sum X⊕Y as composite generators.
      for (const Obj& X : {tensor(C, {x}, {y}), Obj{x, y}}) {
        DinaturalSystem e = build_nat_system(*F, *G), c = build_hom_coend_system(*F, *G);
        size_t e0 = solve_end(e).dim, c0 = solve_coend(c).dim;
        for (int i = 0; i < M->rank(); ++i) {
          e.conditions.push_back({-1, i, nat_condition(*F, *G, e.carrier, X, i)});
          c.conditions.push_back({-1, i, hom_coend_relations(*F, *G, c.carrier, X, i)});
        }
        EXPECT_EQ(solve_end(e).dim, e0) << name;
        EXPECT_EQ(solve_coend(c).dim, c0) << name;
      }
    }
  }
}

TEST(CompositeConditions, EndSolutionsAreNaturalOnCompositeObjects) {
  // θ extended to list objects satisfies d θ_{X▷A} = (id▷θ_A) c for composite X and A.
  for (const auto& n : regular_names()) {
    const auto& M = *mod(n);
    const auto& C = *M.base;
    for (const auto& [F, G] : pairs_on(n)) {
      DinaturalSystem sys = build_nat_system(*F, *G);
      for (const auto& v : solve_end(sys).basis) {
        auto th = sys.carrier.unpack(F->field(), v);
        for (int x = 0; x < C.rank(); ++x)
          for (int y = 0; y < C.rank(); ++y) {
            Obj X = tensor(C, {x}, {y}), A{x, y};
            Obj XA = act(M, X, A);
            Matrix lhs = G->coherence(X, A) * detail::theta_on(*F, *G, th, XA);
            Matrix rhs = id_act(*F->dst, X, detail::theta_on(*F, *G, th, A), F->apply(A), G->apply(A)) * F->coherence(X, A);
            EXPECT_EQ(lhs, rhs) << n << " " << F->name << "," << G->name;
          }
      }
    }
  }
}

TEST(SolveEnd, UniversalWithinTheLinearModel) {
  std::mt19937 rng(3);
  for (const auto& [F, G] : pairs_on("ising_regular")) {
    DinaturalSystem sys = build_nat_system(*F, *G);
    EndResult r = solve_end(sys);
    Matrix S = sys.stacked();
    Matrix v(F->field(), sys.dim(), 1);
    for (const auto& b : r.basis) v = v + b.scaled(random_element(rng, F->field()));
    if (S.rows() > 0) EXPECT_TRUE((S * v).is_zero());
    EXPECT_TRUE(subspace_contained(F->field(), sys.dim(), {v}, r.basis));
  }
}

TEST(Pushforward, ScalesDimensions) {
  for (size_t rr : {1u, 2u, 3u})
    for (const auto& [F, G] : pairs_on("fib_regular")) {
      DinaturalSystem sys = build_nat_system(*F, *G);
      DinaturalSystem p = pushforward(sys, rr);
      EXPECT_EQ(p.dim(), sys.dim() * rr);
      EXPECT_EQ(solve_end(p).dim, solve_end(sys).dim * rr);
    }
}

TEST(CharacterSystem, Z2IdentityProbes) {
  auto id = fun("vec_z2_regular", "id");
  const auto& C = *mod("vec_z2_regular")->base;
  EXPECT_EQ(object_valued_end(build_character_system(*id, *id, C.label("e"))), 1u);
  EXPECT_EQ(object_valued_end(build_character_system(*id, *id, C.label("s"))), 0u);
  EXPECT_EQ(object_valued_end(ordinary(build_character_system(*id, *id, C.label("e")))), 2u);
}

TEST(SerreTarget, FibonacciTau) {
  const auto& M = *mod("fib_regular");
  int t = M.label("tau");
  EXPECT_EQ(object_valued_end(build_serre_target_system(M, t, t)), 1u);
  EXPECT_EQ(object_valued_end(build_serre_target_system(M, t, M.base->unit)), 0u);
}

TEST(ParameterizedEnd, Families) {
  const auto& M = *mod("ising_regular");
  std::map<int, DinaturalSystem> fam;
  for (int i = 0; i < M.rank(); ++i) fam.emplace(i, build_serre_target_system(M, i, i));
  auto res = parameterized_end(fam);
  EXPECT_EQ(res.size(), 3u);
  for (const auto& [i, r] : res) EXPECT_EQ(r.dim, 1u);
  std::map<int, DinaturalSystem> constant;
  for (int i = 0; i < 3; ++i) constant.emplace(i, build_serre_target_system(M, 0, 0));
  auto cr = parameterized_end(constant);
  for (const auto& [i, r] : cr) EXPECT_EQ(r.dim, cr.begin()->second.dim);
  EXPECT_TRUE(parameterized_end(std::map<int, DinaturalSystem>{}).empty());
}
