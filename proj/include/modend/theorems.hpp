/**
 * @file theorems.hpp
 * @brief Named computations that check structural statements about module (co)ends.
 *
 * Each operation reduces to solving end systems from endengine.hpp and
 * compares the outcome with an independent prediction: the direct equations
 * of module natural transformations, the internal Hom multiplicities, or a
 * Kronecker delta. Results are dimensions and multiplicity vectors, which do
 * not depend on the basis choices of the skeletal data.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modend/endengine.hpp"
#include "modend/errors.hpp"
#include "modend/functor.hpp"
#include "modend/module.hpp"

namespace modend {

enum class NatMode { End, Oracle, Both };

struct NatResult {
  size_t dim = 0;
  size_t oracle_dim = 0;
  bool oracle_agrees = true;
  std::vector<Matrix> basis;
  std::vector<Matrix> oracle_basis;
};

/// Dimension of the space of module natural transformations F => G.
inline NatResult nat_m_dim(const ModuleFunctor& F, const ModuleFunctor& G, NatMode mode) {
  NatResult r;
  if (mode != NatMode::Oracle) {
    DinaturalSystem sys = build_nat_system(F, G);
    EndResult e = solve_end(sys);
    r.dim = e.dim;
    r.basis = e.basis;
  }
  if (mode != NatMode::End) {
    DinaturalSystem sys = build_nat_oracle_system(F, G);
    EndResult e = solve_end(sys);
    r.oracle_dim = e.dim;
    r.oracle_basis = e.basis;
    if (mode == NatMode::Oracle) r.dim = e.dim;
  }
  if (mode == NatMode::Both) {
    size_t D = detail::hom_carrier(F, G).dim;
    r.oracle_agrees = subspace_equal(F.field(), D, r.basis, r.oracle_basis);
    if (!r.oracle_agrees)
      throw Error(ErrorKind::OracleMismatch, "module end and oracle differ for (" + F.name + ", " + G.name + ")");
  }
  return r;
}

/// Multiplicity vector over base simples of a ⊗ b for multiplicity vectors a, b.
inline std::vector<int> tensor_mult(const FusionCategory& C, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(C.rank(), 0);
  for (int x = 0; x < C.rank(); ++x)
    for (int y = 0; y < C.rank(); ++y)
      if (a[x] && b[y])
        for (int z : C.fusion.outputs(x, y)) out[z] += a[x] * b[y];
  return out;
}

inline std::vector<int> dual_mult(const FusionCategory& C, const std::vector<int>& a) {
  std::vector<int> out(C.rank(), 0);
  for (int x = 0; x < C.rank(); ++x) out[C.dual[x]] += a[x];
  return out;
}

struct SerreCertificate {
  int i = 0, j = 0, x = 0;
  long lhs = 0;  ///< dim Hom(X, uhom(m_i, m_j)*)
  long rhs = 0;  ///< dim Hom(X, uhom(m_j, S(m_i)))
};

struct SerreResult {
  std::vector<std::vector<int>> on_simples;  ///< on_simples[i][p] = multiplicity of m_p in S(m_i)
  std::vector<SerreCertificate> certificates;
  bool ok = true;
};

/// Relative Serre functor on simples, from the probed coend, with its dimension certificates.
inline SerreResult serre_functor(const ModuleCategory& M) {
  SerreResult r;
  const auto& C = *M.base;
  const int nm = M.rank();
  r.on_simples.assign(nm, std::vector<int>(nm, 0));
  for (int i = 0; i < nm; ++i) {
    std::map<int, DinaturalSystem> family;
    for (int p = 0; p < nm; ++p) family.emplace(p, build_serre_target_system(M, i, p));
    for (const auto& [p, e] : parameterized_end(family)) r.on_simples[i][p] = static_cast<int>(e.dim);
  }
  InternalHomTable H = internal_hom(M);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      std::vector<int> lhs = dual_mult(C, H(i, j));
      std::vector<int> rhs(C.rank(), 0);
      for (int p = 0; p < nm; ++p)
        for (int x = 0; x < C.rank(); ++x) rhs[x] += r.on_simples[i][p] * H(j, p)[x];
      for (int x = 0; x < C.rank(); ++x) {
        r.certificates.push_back({i, j, x, lhs[x], rhs[x]});
        if (lhs[x] != rhs[x]) r.ok = false;
      }
    }
  if (!r.ok) throw Error(ErrorKind::SerreCertificateFailure, "Serre dimension certificate failed on " + M.name);
  return r;
}

/// Multiplicity vector of the end of *F(M)⊗G(N) for F, G into the regular module.
inline std::vector<int> character_vector(const ModuleFunctor& F, const ModuleFunctor& G) {
  const auto& C = *F.dst->base;
  std::vector<int> out(C.rank(), 0);
  for (int p = 0; p < C.rank(); ++p) out[p] = static_cast<int>(object_valued_end(build_character_system(F, G, p)));
  return out;
}

/// The end of *u(M)⊗u(M) over M, as a multiplicity vector over base simples.
inline std::vector<int> internal_character(const ModuleFunctor& u) { return character_vector(u, u); }

/// Multiplicity vector of Υ(x⊗−) over the regular module; throws unless it is δ_x.
inline std::vector<int> upsilon_regular(const CategoryPtr& C, int x) {
  std::vector<int> out(C->rank(), 0);
  for (int p = 0; p < C->rank(); ++p) out[p] = static_cast<int>(object_valued_end(build_upsilon_system(C, x, p)));
  for (int p = 0; p < C->rank(); ++p)
    if (out[p] != (p == x ? 1 : 0))
      throw Error(ErrorKind::UpsilonMismatch, "double dual check failed on " + C->name + " at " + C->simples[x]);
  return out;
}

struct AdjointShift {
  std::vector<int> lhs;  ///< end of *F^{ra}(N)⊗N
  std::vector<int> rhs;  ///< end of *M⊗F(M)
  bool equal = false;
};

/// Compares both sides of the adjoint shift for F = −⊗y on the regular module (right adjoint −⊗y*).
inline AdjointShift adjoint_shift_check(const ModulePtr& R, int y) {
  const auto& C = *R->base;
  ModuleFunctor id = identity_functor(R);
  ModuleFunctor F = act_right_functor(R, y);
  ModuleFunctor Fra = act_right_functor(R, C.dual[y]);
  AdjointShift a;
  a.lhs = character_vector(Fra, id);
  a.rhs = character_vector(id, F);
  a.equal = a.lhs == a.rhs;
  return a;
}

/// Multiplicity identities of the internal Hom against the action and the opposite module.
inline ValidationReport hom_lemma_suite(const ModuleCategory& M) {
  ValidationReport rep;
  const auto& C = *M.base;
  const int nm = M.rank(), nc = C.rank();
  InternalHomTable H = internal_hom(M);
  std::optional<ModuleCategory> Op;
  try {
    Op = opposite_module(M);
  } catch (const Error& e) {
    rep.add(std::string("opposite module could not be built: ") + e.what());
  }
  auto where = [&](int x, int i, int j) {
    return "(" + C.simples[x] + "," + M.simples[i] + "," + M.simples[j] + ")";
  };
  for (int x = 0; x < nc; ++x) {
    std::vector<int> X(nc, 0), Xd(nc, 0);
    X[x] = 1;
    Xd[C.dual[x]] = 1;
    for (int i = 0; i < nm; ++i)
      for (int j = 0; j < nm; ++j) {
        // uhom(X▷m_i, m_j) = uhom(m_i, m_j)⊗X*
        std::vector<int> a(nc, 0);
        for (int t : M.act(x, i))
          for (int z = 0; z < nc; ++z) a[z] += H(t, j)[z];
        if (a != tensor_mult(C, H(i, j), Xd)) rep.add("uhom(X▷M, N) identity fails at " + where(x, i, j));
        // uhom(m_i, X▷m_j) = X⊗uhom(m_i, m_j)
        std::vector<int> b(nc, 0);
        for (int t : M.act(x, j))
          for (int z = 0; z < nc; ++z) b[z] += H(i, t)[z];
        if (b != tensor_mult(C, X, H(i, j))) rep.add("uhom(M, X▷N) identity fails at " + where(x, i, j));
        // Opposite module: Hom(m_j◁X, m_i) against the double dual of uhom(m_i, m_j).
        if (!Op) continue;
        int op_mult = Op->n(x, j, i) ? 1 : 0;
        if (op_mult != H(i, j)[C.dual[C.dual[x]]]) rep.add("opposite internal Hom identity fails at " + where(x, i, j));
      }
  }
  return rep;
}

}  // namespace modend
