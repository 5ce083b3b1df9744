#include <gtest/gtest.h>

#include "common.hpp"
#include "modend/fusion.hpp"

using namespace modend;
using namespace modend::testing;

namespace {

/// Vec_{Z/2} with F(s,s,s) = w, built directly rather than from the corpus.
FusionCategory z2_with(const FieldElement& w) {
  auto C = FusionCategory::make("z2", w.field(), {"e", "s"}, 0, {0, 1}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  C.F_ref(1, 1, 1, 1, 0, 0) = w;
  return C;
}

/// Group 3-cocycle condition checked by brute force over all 16 quadruples.
bool z2_cocycle(const std::function<Rational(int, int, int)>& w) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (w(b, c, d) * w(a, (b + c) % 2, d) * w(a, b, c) != w((a + b) % 2, c, d) * w(a, b, (c + d) % 2))
            return false;
  return true;
}

}  // namespace

TEST(FusionCategory, BundledCategoriesValidate) {
  for (const auto& n : category_names()) {
    auto rep = validate_fusion(*cat(n));
    EXPECT_TRUE(rep.ok()) << n << ": " << (rep.ok() ? "" : rep.violations.front());
  }
}

TEST(FusionCategory, Z2CocycleSignAgreesWithBruteForcePentagon) {
  auto k = Field::rationals();
  for (long sign : {1L, -1L}) {
    auto w = [&](int a, int b, int c) { return (a == 1 && b == 1 && c == 1) ? Rational(sign) : Rational(1); };
    EXPECT_TRUE(z2_cocycle(w));
    EXPECT_TRUE(validate_fusion(z2_with(k->from_rational(Rational(sign)))).ok());
  }
  // A scalar that is not a cocycle value: w(s,s,s) = 2 fails both checks.
  auto bad = [](int a, int b, int c) { return (a == 1 && b == 1 && c == 1) ? Rational(2) : Rational(1); };
  EXPECT_FALSE(z2_cocycle(bad));
  EXPECT_FALSE(validate_fusion(z2_with(k->from_rational(Rational(2)))).ok());
}

TEST(FusionCategory, NegatedFibonacciEntryBreaksPentagonAtTauTuple) {
  FusionCategory C = *cat("fib");
  int t = C.label("tau");
  C.F_ref(t, t, t, t, t, t) = -C.F(t, t, t, t, t, t);
  auto rep = validate_fusion(C);
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("pentagon violated at (tau,tau,tau,tau)"), std::string::npos)
      << rep.violations.front();
}

TEST(Duality, TrivialZ2HasUnitEvaluations) {
  const auto& D = cat("vec_z2_triv")->rigid();
  for (const auto& v : D.ev) EXPECT_TRUE(v.is_one());
  for (const auto& v : D.coev) EXPECT_TRUE(v.is_one());
}

TEST(Duality, TwistedZ2EvaluationIsMinusOne) {
  const auto& C = *cat("vec_z2_omega");
  EXPECT_EQ(C.rigid().ev[C.label("s")], -C.field->one());
}

TEST(Duality, FibonacciEvaluationIsInverseOfFirstFEntry) {
  const auto& C = *cat("fib");
  int t = C.label("tau"), one = C.unit;
  EXPECT_EQ(C.rigid().ev[t], C.F(t, t, t, t, one, one).inverse());
}

TEST(Duality, ZigZagsHoldAsMatrices) {
  for (const auto& n : category_names()) {
    const auto& C = *cat(n);
    for (int x = 0; x < C.rank(); ++x) {
      Obj X{x}, Xd = dual_obj(C, X);
      // (id_X ⊗ ev_X) a_{X,X*,X} (coev_X ⊗ id_X) = id_X
      Matrix z1 = id_tensor(C, X, ev_mor(C, X), tensor(C, Xd, X), C.unit_obj()) * assoc(C, X, Xd, X) *
                  tensor_id(C, coev_mor(C, X), C.unit_obj(), tensor(C, X, Xd), X);
      EXPECT_EQ(z1, identity_on(C.field, X)) << n << " at " << C.simples[x];
      // (ev_X ⊗ id_{X*}) a^{-1}_{X*,X,X*} (id_{X*} ⊗ coev_X) = id_{X*}
      Matrix z2 = tensor_id(C, ev_mor(C, X), tensor(C, Xd, X), C.unit_obj(), Xd) * assoc_inv(C, Xd, X, Xd) *
                  id_tensor(C, Xd, coev_mor(C, X), C.unit_obj(), tensor(C, X, Xd));
      EXPECT_EQ(z2, identity_on(C.field, Xd)) << n << " at " << C.simples[x];
    }
  }
}

TEST(Duality, EvaluationOfTensorProductFactorsThroughPhiR) {
  for (const auto& n : category_names()) {
    const auto& C = *cat(n);
    for (int x = 0; x < C.rank(); ++x)
      for (int y = 0; y < C.rank(); ++y) {
        Obj X{x}, Y{y}, Xd = dual_obj(C, X), Yd = dual_obj(C, Y), XY = tensor(C, X, Y);
        Obj dXY = dual_obj(C, XY), YdXd = tensor(C, Yd, Xd);
        Matrix m = tensor_id(C, phi_r_mor(C, X, Y), dXY, YdXd, XY);
        m = assoc(C, Yd, Xd, XY) * m;
        m = id_tensor(C, Yd, assoc_inv(C, Xd, X, Y), tensor(C, Xd, XY), tensor(C, tensor(C, Xd, X), Y)) * m;
        m = id_tensor(C, Yd, tensor_id(C, ev_mor(C, X), tensor(C, Xd, X), C.unit_obj(), Y),
                      tensor(C, tensor(C, Xd, X), Y), Y) *
            m;
        m = ev_mor(C, Y) * m;
        EXPECT_EQ(m, ev_mor(C, XY)) << n << " at " << C.tuple({x, y});
      }
  }
}

TEST(Duality, LeftEvaluationOfTensorProductFactorsThroughPhiL) {
  for (const auto& n : category_names()) {
    const auto& C = *cat(n);
    for (int x = 0; x < C.rank(); ++x)
      for (int y = 0; y < C.rank(); ++y) {
        Obj X{x}, Y{y}, Xd = dual_obj(C, X), Yd = dual_obj(C, Y), XY = tensor(C, X, Y);
        Obj dXY = dual_obj(C, XY), YdXd = tensor(C, Yd, Xd);
        Matrix m = id_tensor(C, XY, phi_l_mor(C, X, Y), dXY, YdXd);
        m = assoc(C, X, Y, YdXd) * m;
        m = id_tensor(C, X, assoc_inv(C, Y, Yd, Xd), tensor(C, Y, YdXd), tensor(C, tensor(C, Y, Yd), Xd)) * m;
        m = id_tensor(C, X, tensor_id(C, left_ev_mor(C, Y), tensor(C, Y, Yd), C.unit_obj(), Xd),
                      tensor(C, tensor(C, Y, Yd), Xd), Xd) *
            m;
        m = left_ev_mor(C, X) * m;
        EXPECT_EQ(m, left_ev_mor(C, XY)) << n << " at " << C.tuple({x, y});
      }
  }
}

TEST(Duality, InconsistentRigidityIsReported) {
  // Rescaling one F-matrix entry of Fibonacci breaks the pentagon and the zig-zags together.
  FusionCategory C = *cat("fib");
  int t = C.label("tau");
  C.F_ref(t, t, t, t, C.unit, C.unit) = C.field->from_rational(Rational(0));
  C.F_ref(t, t, t, t, C.unit, t) = C.field->one();
  C.F_ref(t, t, t, t, t, C.unit) = C.field->one();
  EXPECT_FALSE(validate_fusion(C).ok());
  try {
    compute_duality(C);
    FAIL() << "expected InconsistentRigidity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentRigidity);
  }
}

TEST(TensorDecompose, Examples) {
  const auto& F = *cat("fib");
  int t = F.label("tau");
  EXPECT_EQ(tensor_decompose(F, t, t), (std::vector<int>{F.unit, t}));
  const auto& Z = *cat("vec_z4");
  EXPECT_EQ(tensor_decompose(Z, Z.label("1"), Z.label("3")), (std::vector<int>{Z.label("0")}));
  for (const auto& n : category_names()) {
    const auto& C = *cat(n);
    for (int a = 0; a < C.rank(); ++a) EXPECT_EQ(tensor_decompose(C, C.unit, a), (std::vector<int>{a}));
  }
  EXPECT_THROW(tensor_decompose(F, 0, 7), Error);
}

TEST(HomDim, SchurCounts) {
  // Labels (e, s) of Vec_{Z/2}.
  EXPECT_EQ(hom_dim({0, 1}, {0, 1}), 1);
  EXPECT_EQ(hom_dim({0, 1}, {1, 0}), 0);
  EXPECT_EQ(hom_dim({1, 2}, {0, 1}), 2);
  EXPECT_THROW(hom_dim({1}, {1, 0}), Error);
}

TEST(FusionCategory, AssociatorIsInverseOfItsInverse) {
  for (const auto& n : category_names()) {
    const auto& C = *cat(n);
    for (int a = 0; a < C.rank(); ++a)
      for (int b = 0; b < C.rank(); ++b)
        for (int c = 0; c < C.rank(); ++c) {
          Obj A{a}, B{b}, D{c};
          EXPECT_EQ(assoc(C, A, B, D) * assoc_inv(C, A, B, D), identity_on(C.field, tensor(C, A, tensor(C, B, D))));
        }
  }
}
