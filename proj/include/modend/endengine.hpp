/**
 * @file endengine.hpp
 * @brief Linear systems whose solution spaces are module ends and coends.
 *
 * Every system has a carrier: a direct sum of blocks, block i being a space
 * of label-respecting matrices attached to the module simple m_i. In a
 * semisimple skeletal category a dinatural family is determined by its
 * components on simples, so the carrier is the ordinary end. Each condition
 * is a linear map out of the carrier, generated by a base simple X and a
 * module simple m_i, equal to the difference of the two sides of the module
 * balancing equation. The module end is the common kernel; the module coend
 * is the carrier modulo the row space of the relations.
 *
 * Recipes provided here:
 *  - nat:       S(M,N) = Hom(F(M), G(N)) for module functors F, G (end).
 *  - nat_oracle: the defining equations of a module natural transformation.
 *  - hom_coend: the coend of the same S. The class of v on m_i is identified
 *               with the class of its transport to X*▷m_i, scaled by the
 *               dimension of X.
 *  - character: Hom(probe, *F(M)⊗G(N)) for F, G into the regular module.
 *  - serre_target: Hom_M(uhom(m_i, U)*▷V, probe), the probe of the Serre coend.
 *  - upsilon:   Hom(probe, uhom(M, x⊗N)) over the regular module, with
 *               conditions indexed by the right multiplications −⊗Y.
 */

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/functor.hpp"
#include "modend/module.hpp"

namespace modend {

/// Direct sum of matrix spaces with chosen coordinate positions.
struct Carrier {
  struct Block {
    size_t rows = 0, cols = 0;
    std::vector<std::pair<size_t, size_t>> basis;  ///< coordinate positions, in carrier order
  };
  std::vector<Block> blocks;
  std::vector<size_t> offset;
  size_t dim = 0;

  void add(size_t rows, size_t cols, std::vector<std::pair<size_t, size_t>> basis) {
    offset.push_back(dim);
    dim += basis.size();
    blocks.push_back(Block{rows, cols, std::move(basis)});
  }

  /// Block matrices of a carrier column vector.
  std::vector<Matrix> unpack(const FieldPtr& f, const Matrix& v) const {
    std::vector<Matrix> out;
    for (size_t b = 0; b < blocks.size(); ++b) {
      Matrix m(f, blocks[b].rows, blocks[b].cols);
      for (size_t k = 0; k < blocks[b].basis.size(); ++k) {
        auto [r, c] = blocks[b].basis[k];
        m(r, c) = v(offset[b] + k, 0);
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  /// Coordinates of a matrix of block b inside the carrier; off-basis entries must vanish.
  void pack_into(Matrix& v, size_t b, const Matrix& m, const FieldElement& sign) const {
    for (size_t k = 0; k < blocks[b].basis.size(); ++k) {
      auto [r, c] = blocks[b].basis[k];
      if (!m(r, c).is_zero()) v(offset[b] + k, 0) += sign * m(r, c);
    }
  }
};

/// One linear condition map, tagged by its generator.
struct Condition {
  int x = 0;  ///< base simple (or -1 for a composite generator)
  int i = 0;  ///< module simple
  Matrix map;  ///< rows: auxiliary coordinates (or relations for coends), cols: carrier
};

struct DinaturalSystem {
  FieldPtr field;
  CategoryPtr base;
  Carrier carrier;
  std::vector<Condition> conditions;
  std::string recipe;
  bool coend = false;

  size_t dim() const { return carrier.dim; }

  Matrix stacked() const {
    Matrix out(field, 0, carrier.dim);
    for (const auto& c : conditions)
      if (c.map.rows() > 0) out = out.rows() == 0 ? c.map : out.vstack(c.map);
    return out;
  }
};

struct EndResult {
  size_t dim = 0;
  std::vector<Matrix> basis;  ///< carrier vectors spanning the end (for a coend: its dual, the annihilator)
  Matrix relations;           ///< coends only: nonzero rows of the RREF of the relation matrix
};

// ---------------------------------------------------------------------------
// Solving.

namespace detail {

/// Column k of the result is the flattened value of eval at the k-th carrier basis vector.
inline Matrix assemble(const FieldPtr& f, const Carrier& car, const std::function<Matrix(const std::vector<Matrix>&)>& eval) {
  Matrix out;
  for (size_t k = 0; k < car.dim; ++k) {
    Matrix e(f, car.dim, 1);
    e(k, 0) = f->one();
    Matrix val = eval(car.unpack(f, e)).flatten();
    if (k == 0) out = Matrix(f, val.rows(), car.dim);
    out.set_block(0, k, val);
  }
  if (car.dim == 0) out = Matrix(f, eval(car.unpack(f, Matrix(f, 0, 1))).flatten().rows(), 0);
  return out;
}

inline void check_sub(const FusionCategory& C, const std::vector<int>& sub) {
  std::set<int> s(sub.begin(), sub.end());
  for (int a : s)
    if (a < 0 || a >= C.rank()) throw Error(ErrorKind::UnknownLabel, "label out of range in subset");
  if (!s.count(C.unit)) throw Error(ErrorKind::NotATensorSubcategory, "subset does not contain the unit");
  for (int a : s) {
    if (!s.count(C.dual[a])) throw Error(ErrorKind::NotATensorSubcategory, "subset not closed under duals");
    for (int b : s)
      for (int c : C.fusion.outputs(a, b))
        if (!s.count(c)) throw Error(ErrorKind::NotATensorSubcategory, "subset not closed under fusion");
  }
}

}  // namespace detail

/// Common kernel of all conditions.
inline EndResult solve_end(const DinaturalSystem& sys) {
  EndResult r;
  Matrix m = sys.stacked();
  if (m.rows() == 0) {
    for (size_t k = 0; k < sys.dim(); ++k) {
      Matrix e(sys.field, sys.dim(), 1);
      e(k, 0) = sys.field->one();
      r.basis.push_back(e);
    }
  } else {
    r.basis = nullspace(m);
  }
  r.dim = r.basis.size();
  return r;
}

/// Carrier modulo the span of the relation rows.
inline EndResult solve_coend(const DinaturalSystem& sys) {
  EndResult r = solve_end(sys);
  Matrix m = sys.stacked();
  Matrix red = m.rows() == 0 ? Matrix(sys.field, 0, sys.dim()) : m.rref();
  size_t rank = sys.dim() - r.dim;
  r.relations = red.rows() == 0 ? red : red.block(0, 0, rank, sys.dim());
  return r;
}

/// Keeps only the conditions generated by labels in sub (a tensor subcategory).
inline DinaturalSystem restrict_conditions(const DinaturalSystem& sys, const std::vector<int>& sub) {
  detail::check_sub(*sys.base, sub);
  std::set<int> s(sub.begin(), sub.end());
  DinaturalSystem out = sys;
  out.conditions.clear();
  for (const auto& c : sys.conditions)
    if (c.x >= 0 && s.count(c.x)) out.conditions.push_back(c);
  return out;
}

/// The system with every condition dropped (the ordinary end).
inline DinaturalSystem ordinary(const DinaturalSystem& sys) {
  DinaturalSystem out = sys;
  out.conditions.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Hom(F(-), G(-)) between module functors.

namespace detail {

inline void check_pair(const ModuleFunctor& F, const ModuleFunctor& G) {
  bool same_src = F.src.get() == G.src.get() || F.src->name == G.src->name;
  bool same_dst = F.dst.get() == G.dst.get() || F.dst->name == G.dst->name;
  if (!same_src || !same_dst)
    throw Error(ErrorKind::SourceTargetMismatch, F.name + " and " + G.name + " have different source or target");
}

inline Carrier hom_carrier(const ModuleFunctor& F, const ModuleFunctor& G) {
  Carrier car;
  for (int i = 0; i < F.src->rank(); ++i) {
    Obj fa = F.image(i), ga = G.image(i);
    car.add(ga.size(), fa.size(), hom_basis(fa, ga));
  }
  return car;
}

/// Block-diagonal θ on a list object of the source module.
inline Matrix theta_on(const ModuleFunctor& F, const ModuleFunctor& G, const std::vector<Matrix>& theta, const Obj& A) {
  Obj FA = F.apply(A), GA = G.apply(A);
  Matrix out(F.field(), GA.size(), FA.size());
  size_t r = 0, c = 0;
  for (int a : A) {
    out.set_block(r, c, theta[a]);
    r += theta[a].rows();
    c += theta[a].cols();
  }
  return out;
}

}  // namespace detail

/// Pre-balancing of Hom(F(-), G(-)): β^X_{M,N}(α) = ℓ (ev_X▷id) m^{-1} (id_{X*}▷(d_{X,N} α)) c_{X*,M}.
inline Matrix beta_hom(const ModuleFunctor& F, const ModuleFunctor& G, const Obj& X, const Obj& A, const Obj& B,
                       const Matrix& alpha) {
  const auto& C = *F.src->base;
  const ModuleCategory& N = *F.dst;
  Obj Xd = dual_obj(C, X), XdX = tensor(C, Xd, X);
  Obj GB = G.apply(B), FA = F.apply(A);
  Matrix d_alpha = G.coherence(X, B) * alpha;  // F(A) -> X▷G(B)
  Matrix post = unitor(N, GB) * act_id(N, ev_mor(C, X), XdX, C.unit_obj(), GB) * massoc_inv(N, Xd, X, GB);
  return post * id_act(N, Xd, d_alpha, FA, act(N, X, GB)) * F.coherence(Xd, A);
}

/// The module balancing condition of Hom(F-, G-) at a (possibly composite) base object X and module simple i.
inline Matrix nat_condition(const ModuleFunctor& F, const ModuleFunctor& G, const Carrier& car, const Obj& X, int i) {
  const auto& C = *F.src->base;
  const ModuleCategory& M = *F.src;
  Obj A{i}, Xd = dual_obj(C, X), XdX = tensor(C, Xd, X), XA = act(M, X, A);
  Matrix f = unitor(M, A) * act_id(M, ev_mor(C, X), XdX, C.unit_obj(), A);
  Matrix Ff = F.apply(f, act(M, XdX, A), A);
  Matrix Fm = F.apply(massoc(M, Xd, X, A), act(M, XdX, A), act(M, Xd, XA));
  return detail::assemble(F.field(), car, [&](const std::vector<Matrix>& th) {
    Matrix lhs = th[i] * Ff;
    Matrix rhs = beta_hom(F, G, X, XA, A, detail::theta_on(F, G, th, XA)) * Fm;
    return lhs - rhs;
  });
}

inline DinaturalSystem build_nat_system(const ModuleFunctor& F, const ModuleFunctor& G) {
  detail::check_pair(F, G);
  DinaturalSystem sys{F.field(), F.src->base, detail::hom_carrier(F, G), {}, "nat", false};
  for (int x = 0; x < sys.base->rank(); ++x)
    for (int i = 0; i < F.src->rank(); ++i) sys.conditions.push_back({x, i, nat_condition(F, G, sys.carrier, {x}, i)});
  return sys;
}

/// d_{X,m} θ_{X▷m} = (id_X▷θ_m) c_{X,m} over all simple (X, m), on the same carrier.
inline DinaturalSystem build_nat_oracle_system(const ModuleFunctor& F, const ModuleFunctor& G) {
  detail::check_pair(F, G);
  DinaturalSystem sys{F.field(), F.src->base, detail::hom_carrier(F, G), {}, "nat_oracle", false};
  const ModuleCategory& M = *F.src;
  const ModuleCategory& N = *F.dst;
  for (int x = 0; x < sys.base->rank(); ++x)
    for (int i = 0; i < M.rank(); ++i) {
      Obj X{x}, A{i}, XA = act(M, X, A);
      Obj FA = F.apply(A), GA = G.apply(A);
      Matrix cF = F.coherence(X, A), dG = G.coherence(X, A);
      Matrix m = detail::assemble(F.field(), sys.carrier, [&](const std::vector<Matrix>& th) {
        return dG * detail::theta_on(F, G, th, XA) - id_act(N, X, th[i], FA, GA) * cF;
      });
      sys.conditions.push_back({x, i, m});
    }
  return sys;
}

/// Relations of the module coend of Hom(F-, G-) at a (possibly composite) X and module simple i.
inline Matrix hom_coend_relations(const ModuleFunctor& F, const ModuleFunctor& G, const Carrier& car, const Obj& X,
                                  int i) {
  const auto& C = *F.src->base;
  const ModuleCategory& M = *F.src;
  const FieldPtr& k = F.field();
  Obj A{i}, Xd = dual_obj(C, X), XXd = tensor(C, X, Xd), XdA = act(M, Xd, A);
  // G(m_{X,X*,A}) G(coev_X▷id) G(ℓ^{-1}): G(A) -> G(X▷(X*▷A))
  Matrix pre = G.apply(massoc(M, X, Xd, A), act(M, XXd, A), act(M, X, XdA)) *
               G.apply(act_id(M, coev_mor(C, X), C.unit_obj(), XXd, A), A, act(M, XXd, A)) *
               G.apply(unitor(M, A).inverse(), A, A);
  // The left side is weighted by the dimension of X so that the relation is additive in X.
  const auto& dims = C.rigid().dim;
  if (dims.empty())
    throw Error(ErrorKind::InconsistentRigidity, "no positive dimension function over the field of " + C.name);
  FieldElement dX = k->zero();
  for (int x : X) dX += dims[x];
  size_t nb = car.blocks[i].basis.size();
  Matrix out(k, nb, car.dim);
  for (size_t b = 0; b < nb; ++b) {
    Matrix v(k, car.blocks[i].rows, car.blocks[i].cols);
    auto [r, c] = car.blocks[i].basis[b];
    v(r, c) = k->one();
    Matrix u = beta_hom(F, G, X, A, XdA, pre * v);  // F(X*▷A) -> G(X*▷A)
    Matrix rel(k, car.dim, 1);
    rel(car.offset[i] + b, 0) = dX;
    // λ on X*▷A: sum of the diagonal blocks over the summands.
    size_t ro = 0, co = 0;
    for (int t : XdA) {
      size_t gr = G.image(t).size(), fc = F.image(t).size();
      car.pack_into(rel, t, u.block(ro, co, gr, fc), -k->one());
      ro += gr;
      co += fc;
    }
    for (size_t j = 0; j < car.dim; ++j) out(b, j) = rel(j, 0);
  }
  return out;
}

inline DinaturalSystem build_hom_coend_system(const ModuleFunctor& F, const ModuleFunctor& G) {
  detail::check_pair(F, G);
  DinaturalSystem sys{F.field(), F.src->base, detail::hom_carrier(F, G), {}, "hom_coend", true};
  for (int x = 0; x < sys.base->rank(); ++x)
    for (int i = 0; i < F.src->rank(); ++i)
      sys.conditions.push_back({x, i, hom_coend_relations(F, G, sys.carrier, {x}, i)});
  return sys;
}

// ---------------------------------------------------------------------------
// Hom(probe, *F(M)⊗G(N)) for F, G into the regular module.

namespace detail {

/// Carrier vector components π_{n} extended to a list object N of the source module.
inline Matrix character_pi(const ModuleFunctor& F, const ModuleFunctor& G, const std::vector<Matrix>& pi,
                           const Obj& N) {
  const auto& C = *F.dst->base;
  const FieldPtr& k = F.field();
  Obj dFN = dual_obj(C, F.apply(N)), GN = G.apply(N);
  Matrix out(k, tensor(C, dFN, GN).size(), 1);
  for (size_t a = 0; a < N.size(); ++a) {
    Obj Na{N[a]};
    Matrix p(k, 1, N.size()), iota(k, N.size(), 1);
    p(0, a) = k->one();
    iota(a, 0) = k->one();
    Matrix Fp = F.apply(p, N, Na), Gi = G.apply(iota, Na, N);
    out = out + tensor_mor(C, Fp.transpose(), dual_obj(C, F.apply(Na)), dFN, Gi, G.apply(Na), GN) * pi[N[a]];
  }
  return out;
}

/// γ^X_{A,N}: *F(A)⊗G(X▷N) -> *F(X*▷A)⊗G(N)
inline Matrix character_gamma(const ModuleFunctor& F, const ModuleFunctor& G, const Obj& X, const Obj& A,
                              const Obj& N) {
  const auto& C = *F.dst->base;
  const ModuleCategory& M = *F.src;
  Obj Xd = dual_obj(C, X), FA = F.apply(A), dFA = dual_obj(C, FA), GN = G.apply(N);
  Obj XN = act(M, X, N), XdA = act(M, Xd, A);
  Matrix step1 = id_tensor(C, dFA, G.coherence(X, N), G.apply(XN), tensor(C, X, GN));
  Matrix step2 = assoc_inv(C, dFA, X, GN);
  Matrix kappa = F.coherence(Xd, A).transpose() * phi_l_mor(C, Xd, FA).inverse();
  Matrix step3 = tensor_id(C, kappa, tensor(C, dFA, X), dual_obj(C, F.apply(XdA)), GN);
  return step3 * step2 * step1;
}

}  // namespace detail

/// Condition of the character end at a (possibly composite) X and module simple i.
inline Matrix character_condition(const ModuleFunctor& F, const ModuleFunctor& G, const Carrier& car, const Obj& X,
                                  int i) {
  const auto& C = *F.dst->base;
  const ModuleCategory& M = *F.src;
  Obj A{i}, Xd = dual_obj(C, X), XdX = tensor(C, Xd, X), XA = act(M, X, A), GA = G.apply(A);
  Obj XdXA = act(M, XdX, A), XdXAi = act(M, Xd, XA);
  Matrix f = unitor(M, A) * act_id(M, ev_mor(C, X), XdX, C.unit_obj(), A);
  Matrix lhs_map = tensor_id(C, F.apply(f, XdXA, A).transpose(), dual_obj(C, F.apply(A)),
                             dual_obj(C, F.apply(XdXA)), GA);
  Matrix rhs_map = tensor_id(C, F.apply(massoc(M, Xd, X, A), XdXA, XdXAi).transpose(), dual_obj(C, F.apply(XdXAi)),
                             dual_obj(C, F.apply(XdXA)), GA) *
                   detail::character_gamma(F, G, X, XA, A);
  return detail::assemble(F.field(), car, [&](const std::vector<Matrix>& pi) {
    return lhs_map * pi[i] - rhs_map * detail::character_pi(F, G, pi, XA);
  });
}

inline DinaturalSystem build_character_system(const ModuleFunctor& F, const ModuleFunctor& G, int probe) {
  detail::check_pair(F, G);
  const auto& C = *F.dst->base;
  if (probe < 0 || probe >= C.rank()) throw Error(ErrorKind::UnknownLabel, "probe label out of range");
  if (F.dst->rank() != C.rank() || F.dst->right)
    throw Error(ErrorKind::SourceTargetMismatch, "character functors must land in the regular module");
  DinaturalSystem sys{F.field(), F.src->base, {}, {}, "character", false};
  for (int i = 0; i < F.src->rank(); ++i) {
    Obj T = tensor(C, dual_obj(C, F.image(i)), G.image(i));
    std::vector<std::pair<size_t, size_t>> b;
    for (size_t r = 0; r < T.size(); ++r)
      if (T[r] == probe) b.emplace_back(r, 0);
    sys.carrier.add(T.size(), 1, b);
  }
  for (int x = 0; x < C.rank(); ++x)
    for (int i = 0; i < F.src->rank(); ++i)
      sys.conditions.push_back({x, i, character_condition(F, G, sys.carrier, {x}, i)});
  return sys;
}

// ---------------------------------------------------------------------------
// Serre coend probed by Hom_M(-, P).

namespace detail {

/// ρ: uhom(A, X▷V) -> X⊗uhom(A, V)
inline Matrix uhom_rho(const ModuleCategory& M, const Obj& X, const Obj& A, const Obj& V) {
  const auto& C = *M.base;
  Obj U = uhom_obj(M, A, V), XU = tensor(C, X, U), XV = act(M, X, V);
  Obj XUA = act(M, XU, A), XUAi = act(M, X, act(M, U, A));
  Matrix eta = uhom_unit(M, XU, A);
  Matrix Rm = uhom_map2(M, A, massoc(M, X, U, A), XUA, XUAi);
  Matrix Reps = uhom_map2(M, A, id_act(M, X, uhom_counit(M, A, V), act(M, U, A), V), XUAi, XV);
  return (Reps * Rm * eta).inverse();
}

}  // namespace detail

inline DinaturalSystem build_serre_target_system(const ModuleCategory& M, int i, int probe) {
  if (M.right) throw Error(ErrorKind::SourceTargetMismatch, "Serre functor needs a left module category");
  if (i < 0 || i >= M.rank() || probe < 0 || probe >= M.rank())
    throw Error(ErrorKind::UnknownLabel, "module label out of range");
  const auto& C = *M.base;
  const FieldPtr& k = M.field();
  Obj I{i};
  DinaturalSystem sys{k, M.base, {}, {}, "serre_target", false};
  std::vector<Obj> U(M.rank()), T(M.rank());
  for (int j = 0; j < M.rank(); ++j) {
    U[j] = uhom_obj(M, I, {j});
    T[j] = act(M, dual_obj(C, U[j]), {j});
    std::vector<std::pair<size_t, size_t>> b;
    for (size_t c = 0; c < T[j].size(); ++c)
      if (T[j][c] == probe) b.emplace_back(0, c);
    sys.carrier.add(1, T[j].size(), b);
  }
  for (int x = 0; x < C.rank(); ++x)
    for (int j = 0; j < M.rank(); ++j) {
      Obj X{x}, A{j}, Xd = dual_obj(C, X), Xl = dual_obj(C, X);
      Obj LX = tensor(C, Xl, X), dLX = dual_obj(C, LX), XdX = tensor(C, Xd, X), XA = act(M, X, A);
      Obj Ud = dual_obj(C, U[j]), XU = tensor(C, X, U[j]), dXU = dual_obj(C, XU), UdXd = tensor(C, Ud, Xd);
      Obj W = uhom_obj(M, I, XA), dW = dual_obj(C, W);
      // LHS: id_{U*}▷[ℓ_A((coev^l_X)^T▷id_A)]
      Matrix g = unitor(M, A) * act_id(M, left_coev_mor(C, X).transpose(), dLX, C.unit_obj(), A);
      Matrix lhs_map = id_act(M, Ud, g, act(M, dLX, A), A);
      // RHS: γ (id_{U*}▷μ)
      Matrix mu = massoc(M, Xd, X, A) * act_id(M, phi_r_mor(C, Xl, X), dLX, XdX, A);
      Matrix gam = act_id(M, detail::uhom_rho(M, X, I, A).transpose(), dXU, dW, XA) *
                   act_id(M, phi_r_mor(C, X, U[j]).inverse(), UdXd, dXU, XA) * massoc_inv(M, Ud, Xd, XA);
      Matrix rhs_pre = gam * id_act(M, Ud, mu, act(M, dLX, A), act(M, Xd, XA));
      // Σ_t φ_t ∘ [(R(ι_t))^T ▷ p_t]
      std::vector<Matrix> legs;
      for (size_t t = 0; t < XA.size(); ++t) {
        Obj Mt{XA[t]};
        Matrix iota(k, XA.size(), 1), p(k, 1, XA.size());
        iota(t, 0) = k->one();
        p(0, t) = k->one();
        Matrix Ri = uhom_map2(M, I, iota, Mt, XA);
        legs.push_back(act_mor(M, Ri.transpose(), dW, dual_obj(C, U[XA[t]]), p, XA, Mt) * rhs_pre);
      }
      Matrix m = detail::assemble(k, sys.carrier, [&](const std::vector<Matrix>& phi) {
        Matrix out = phi[j] * lhs_map;
        for (size_t t = 0; t < XA.size(); ++t) out = out - phi[XA[t]] * legs[t];
        return out;
      });
      sys.conditions.push_back({x, j, m});
    }
  return sys;
}

// ---------------------------------------------------------------------------
// Υ(x⊗−) on the regular module, probed by Hom(probe, -).

namespace detail {

/// π_N = Σ_α uhom(p_α, G(ι_α)) π_{n_α} for G = x⊗−.
inline Matrix upsilon_pi(const FusionCategory& C, const ModuleCategory& R, int x, const std::vector<Matrix>& pi,
                         const Obj& N) {
  const FieldPtr& k = C.field;
  Obj X{x}, GN = tensor(C, X, N);
  Matrix out(k, uhom_obj(R, N, GN).size(), 1);
  for (size_t a = 0; a < N.size(); ++a) {
    Obj Na{N[a]}, GNa = tensor(C, X, Na);
    Matrix p(k, 1, N.size()), iota(k, N.size(), 1);
    p(0, a) = k->one();
    iota(a, 0) = k->one();
    Matrix step1 = uhom_map1(R, p, N, Na, GNa);
    Matrix step2 = uhom_map2(R, N, id_tensor(C, X, iota, Na, N), GNa, GN);
    out = out + step2 * step1 * pi[N[a]];
  }
  return out;
}

}  // namespace detail

inline DinaturalSystem build_upsilon_system(const CategoryPtr& Cp, int x, int probe) {
  const FusionCategory& C = *Cp;
  if (x < 0 || x >= C.rank() || probe < 0 || probe >= C.rank())
    throw Error(ErrorKind::UnknownLabel, "label out of range");
  const FieldPtr& k = C.field;
  ModuleCategory R = regular_module(Cp);
  Obj X{x};
  DinaturalSystem sys{k, Cp, {}, {}, "upsilon", false};
  for (int i = 0; i < C.rank(); ++i) {
    Obj V = uhom_obj(R, {i}, tensor(C, X, {i}));
    std::vector<std::pair<size_t, size_t>> b;
    for (size_t r = 0; r < V.size(); ++r)
      if (V[r] == probe) b.emplace_back(r, 0);
    sys.carrier.add(V.size(), 1, b);
  }
  for (int y = 0; y < C.rank(); ++y)
    for (int i = 0; i < C.rank(); ++i) {
      Obj Y{y}, Yl = dual_obj(C, Y), A{i};
      Obj FA = tensor(C, A, Y), FlaFA = tensor(C, FA, Yl), GA = tensor(C, X, A);
      Obj YYl = tensor(C, Y, Yl);
      // ev_F = (id⊗ev^l_Y) a_{A,Y,*Y}: (A⊗Y)⊗*Y -> A
      Matrix evF = id_tensor(C, A, left_ev_mor(C, Y), YYl, C.unit_obj()) * assoc(C, A, Y, Yl);
      Matrix lhs_map = uhom_map1(R, evF, FlaFA, A, GA);
      // γ = ξ_{A, G(A)} ∘ uhom(id, a^{-1}_{x,A,Y})
      Obj GFA = tensor(C, X, FA), FGA = tensor(C, GA, Y);
      Matrix re = uhom_map2(R, FA, assoc_inv(C, X, A, Y), GFA, FGA);
      Obj Z = uhom_obj(R, FA, FGA), ZFA = tensor(C, Z, FA);
      Matrix eps = uhom_counit(R, FA, FGA);
      Matrix omega = id_tensor(C, GA, left_ev_mor(C, Y), YYl, C.unit_obj()) * assoc(C, GA, Y, Yl) *
                     tensor_id(C, eps, ZFA, FGA, Yl);
      Matrix h = omega * assoc_inv(C, Z, FA, Yl);
      Matrix xi = uhom_psi(R, Z, FlaFA, GA, h);
      Matrix rhs_map = xi * re;
      Matrix m = detail::assemble(k, sys.carrier, [&](const std::vector<Matrix>& pi) {
        return lhs_map * pi[i] - rhs_map * detail::upsilon_pi(C, R, x, pi, FA);
      });
      sys.conditions.push_back({y, i, m});
    }
  return sys;
}

// ---------------------------------------------------------------------------
// Object-valued ends and parameter families.

enum class Recipe { Character, SerreTarget, Upsilon };

/// dim Hom(probe, E) (or Hom(E, probe) for the Serre target) of the probed end.
inline size_t object_valued_end(const DinaturalSystem& sys) { return solve_end(sys).dim; }

/// Pointwise solve of a family of systems.
template <class Index>
std::map<Index, EndResult> parameterized_end(const std::map<Index, DinaturalSystem>& family) {
  std::map<Index, EndResult> out;
  for (const auto& [idx, sys] : family) out.emplace(idx, solve_end(sys));
  return out;
}

}  // namespace modend
