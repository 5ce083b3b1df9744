/**
 * @file module.hpp
 * @brief Module categories over a skeletal fusion category.
 *
 * A left module category stores the action multiplicities n_{X,i}^j and the
 * L-symbols L(X,Y,i,j,Z,t): the entry of m_{X,Y,m_i}: (X⊗Y)▷m_i -> X▷(Y▷m_i)
 * from the path (X⊗Y -> Z)▷m_i -> m_t to the path X▷(Y▷m_i -> m_j) -> m_t.
 *
 * Right module categories (produced by opposite_module) reuse the same tables
 * with right = true: the action pairing is indexed (i, X) -> j, and
 * L(X,Y,i,j,Z,t) is the entry of the right associator
 * m_i◁(X⊗Y) -> (m_i◁X)◁Y from the path through Z to the path through m_j.
 *
 * Morphisms of an opposite category are stored as the transpose of the
 * underlying morphism, which makes composition and the action on morphisms
 * agree with the generic path-basis calculus.
 */

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/fusion.hpp"
#include "modend/skeletal.hpp"

namespace modend {

using CategoryPtr = std::shared_ptr<const FusionCategory>;

class ModuleCategory {
 public:
  std::string name;
  CategoryPtr base;
  std::vector<std::string> simples;
  bool right = false;
  Pairing action;
  std::vector<FieldElement> l_symbols;
  std::vector<FieldElement> unit_scalars;

  /// Empty module data over c with k simples; admissible L-symbols default to 1.
  static ModuleCategory make(std::string name, CategoryPtr c, std::vector<std::string> simples, bool right,
                             const std::vector<std::array<int, 3>>& action_triples) {
    ModuleCategory m;
    m.name = std::move(name);
    m.base = std::move(c);
    m.simples = std::move(simples);
    m.right = right;
    const int nc = m.base->rank(), nm = m.rank();
    m.action = right ? Pairing(nm, nc, nm) : Pairing(nc, nm, nm);
    for (const auto& t : action_triples) m.action.set(t[0], t[1], t[2]);
    m.l_symbols.assign(static_cast<size_t>(nc) * nc * nm * nm * nc * nm, m.field()->zero());
    m.fill_default_l();
    m.unit_scalars.assign(nm, m.field()->one());
    return m;
  }

  const FieldPtr& field() const { return base->field; }
  int rank() const { return static_cast<int>(simples.size()); }

  int label(const std::string& s) const {
    for (int i = 0; i < rank(); ++i)
      if (simples[i] == s) return i;
    throw Error(ErrorKind::UnknownLabel, "no simple '" + s + "' in module category " + name);
  }

  /// n_{X,i}^j (for right modules: multiplicity of m_j in m_i◁X).
  bool n(int x, int i, int j) const { return right ? action.has(i, x, j) : action.has(x, i, j); }

  /// Simples j with n_{X,i}^j = 1, ascending.
  const std::vector<int>& act(int x, int i) const { return right ? action.outputs(i, x) : action.outputs(x, i); }

  bool l_admissible(int x, int y, int i, int j, int z, int t) const {
    return base->N(x, y, z) && n(z, i, t) && n(y, i, j) && n(x, j, t);
  }

  size_t l_index(int x, int y, int i, int j, int z, int t) const {
    size_t nc = base->simples.size(), nm = simples.size();
    return ((((static_cast<size_t>(x) * nc + y) * nm + i) * nm + j) * nc + z) * nm + t;
  }

  const FieldElement& L(int x, int y, int i, int j, int z, int t) const { return l_symbols[l_index(x, y, i, j, z, t)]; }
  FieldElement& L_ref(int x, int y, int i, int j, int z, int t) { return l_symbols[l_index(x, y, i, j, z, t)]; }

  void fill_default_l() {
    const int nc = base->rank(), nm = rank();
    for (auto& v : l_symbols) v = field()->zero();
    for (int x = 0; x < nc; ++x)
      for (int y = 0; y < nc; ++y)
        for (int i = 0; i < nm; ++i)
          for (int j = 0; j < nm; ++j)
            for (int z = 0; z < nc; ++z)
              for (int t = 0; t < nm; ++t)
                if (l_admissible(x, y, i, j, z, t)) L_ref(x, y, i, j, z, t) = field()->one();
  }

  std::string tuple_str(int x, int y, int i) const {
    return "(" + base->simples[x] + "," + base->simples[y] + "," + simples[i] + ")";
  }
};

using ModulePtr = std::shared_ptr<const ModuleCategory>;

// ---------------------------------------------------------------------------
// Left action calculus.

/// X▷A for a C-object X and an M-object A.
inline Obj act(const ModuleCategory& M, const Obj& X, const Obj& A) { return product(M.action, X, A); }

/// f▷g for f: X -> X2 in C and g: A -> A2 in M.
inline Matrix act_mor(const ModuleCategory& M, const Matrix& f, const Obj& X, const Obj& X2, const Matrix& g,
                      const Obj& A, const Obj& A2) {
  return product_mor(M.action, f, X, X2, g, A, A2);
}

inline Matrix id_act(const ModuleCategory& M, const Obj& X, const Matrix& g, const Obj& A, const Obj& A2) {
  return act_mor(M, identity_on(M.field(), X), X, X, g, A, A2);
}

inline Matrix act_id(const ModuleCategory& M, const Matrix& f, const Obj& X, const Obj& X2, const Obj& A) {
  return act_mor(M, f, X, X2, identity_on(M.field(), A), A, A);
}

/// m_{X,Y,A}: (X⊗Y)▷A -> X▷(Y▷A)
inline Matrix massoc(const ModuleCategory& M, const Obj& X, const Obj& Y, const Obj& A) {
  const auto& C = *M.base;
  return rebracket_forward(M.field(), C.fusion, M.action, M.action, M.action, X, Y, A,
                           [&](int x, int y, int i, int t, int z, int j) { return M.L(x, y, i, j, z, t); });
}

inline Matrix massoc_inv(const ModuleCategory& M, const Obj& X, const Obj& Y, const Obj& A) {
  return massoc(M, X, Y, A).inverse();
}

/// Unitor 1▷A -> A (the list 1▷A coincides with A).
inline Matrix unitor(const ModuleCategory& M, const Obj& A) {
  Matrix out(M.field(), A.size(), A.size());
  for (size_t k = 0; k < A.size(); ++k) out(k, k) = M.unit_scalars[A[k]];
  return out;
}

// ---------------------------------------------------------------------------
// Right action calculus.

inline Obj ract(const ModuleCategory& M, const Obj& A, const Obj& X) { return product(M.action, A, X); }

inline Matrix ract_mor(const ModuleCategory& M, const Matrix& g, const Obj& A, const Obj& A2, const Matrix& f,
                       const Obj& X, const Obj& X2) {
  return product_mor(M.action, g, A, A2, f, X, X2);
}

/// Right associator A◁(X⊗Y) -> (A◁X)◁Y
inline Matrix rmassoc(const ModuleCategory& M, const Obj& A, const Obj& X, const Obj& Y) {
  const auto& C = *M.base;
  return rebracket_backward(M.field(), M.action, M.action, C.fusion, M.action, A, X, Y,
                            [&](int i, int x, int y, int t, int j, int z) { return M.L(x, y, i, j, z, t); });
}

// ---------------------------------------------------------------------------
// Validation.

namespace detail {

inline void check_action_basics(const ModuleCategory& M, ValidationReport& rep) {
  const auto& C = *M.base;
  for (int i = 0; i < M.rank(); ++i)
    for (int j = 0; j < M.rank(); ++j)
      if (M.n(C.unit, i, j) != (i == j))
        rep.add("unit action n_{1," + M.simples[i] + "}^" + M.simples[j] + " must be a Kronecker delta");
  for (int i = 0; i < M.rank(); ++i)
    if (M.unit_scalars[i].is_zero()) rep.add("unit scalar of " + M.simples[i] + " is zero");
}

inline void report_residual(const ModuleCategory& M, const Matrix& res, const std::string& what,
                            const std::string& where, ValidationReport& rep) {
  (void)M;
  if (!res.is_zero()) rep.add(what + " violated at " + where);
}

}  // namespace detail

inline ValidationReport validate_left_module(const ModuleCategory& M) {
  ValidationReport rep;
  const auto& C = *M.base;
  detail::check_action_basics(M, rep);
  if (!rep.ok()) return rep;
  const int nc = C.rank(), nm = M.rank();
  // Invertibility of every L-block.
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int i = 0; i < nm; ++i) {
        Matrix m = massoc(M, {x}, {y}, {i});
        if (m.rows() != m.cols() || m.rank() != m.rows()) rep.add("L-block not invertible at " + M.tuple_str(x, y, i));
      }
  if (!rep.ok()) return rep;
  // Mixed pentagon.
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int z = 0; z < nc; ++z)
        for (int i = 0; i < nm; ++i) {
          Obj X{x}, Y{y}, Z{z}, A{i};
          Obj XY = tensor(C, X, Y), YZ = tensor(C, Y, Z), ZA = act(M, Z, A);
          Matrix lhs = massoc(M, X, Y, ZA) * massoc(M, XY, Z, A);
          Matrix rhs = id_act(M, X, massoc(M, Y, Z, A), act(M, YZ, A), act(M, Y, ZA)) * massoc(M, X, YZ, A) *
                       act_id(M, assoc(C, X, Y, Z), tensor(C, XY, Z), tensor(C, X, YZ), A);
          if (lhs != rhs)
            rep.add("mixed pentagon violated at (" + C.simples[x] + "," + C.simples[y] + "," + C.simples[z] + "," +
                    M.simples[i] + ")");
        }
  // Unit coherence: (id_X▷ℓ_A) m_{X,1,A} = id and ℓ_{X▷A} m_{1,X,A} = id.
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i) {
      Obj X{x}, A{i}, U = C.unit_obj();
      Obj XA = act(M, X, A);
      Matrix u1 = id_act(M, X, unitor(M, A), A, A) * massoc(M, X, U, A);
      Matrix u2 = unitor(M, XA) * massoc(M, U, X, A);
      if (u1 != identity_on(M.field(), XA)) rep.add("unit coherence (X,1,M) violated at " + M.tuple_str(x, C.unit, i));
      if (u2 != identity_on(M.field(), XA)) rep.add("unit coherence (1,X,M) violated at " + M.tuple_str(C.unit, x, i));
    }
  return rep;
}

inline ValidationReport validate_right_module(const ModuleCategory& M) {
  ValidationReport rep;
  const auto& C = *M.base;
  detail::check_action_basics(M, rep);
  if (!rep.ok()) return rep;
  const int nc = C.rank(), nm = M.rank();
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int i = 0; i < nm; ++i) {
        Matrix m = rmassoc(M, {i}, {x}, {y});
        if (m.rows() != m.cols() || m.rank() != m.rows()) rep.add("L-block not invertible at " + M.tuple_str(x, y, i));
      }
  if (!rep.ok()) return rep;
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int z = 0; z < nc; ++z)
        for (int i = 0; i < nm; ++i) {
          Obj X{x}, Y{y}, Z{z}, A{i};
          Obj XY = tensor(C, X, Y), YZ = tensor(C, Y, Z), AX = ract(M, A, X);
          Matrix lhs = rmassoc(M, AX, Y, Z) * rmassoc(M, A, X, YZ) *
                       ract_mor(M, identity_on(M.field(), A), A, A, assoc(C, X, Y, Z), tensor(C, XY, Z),
                                tensor(C, X, YZ));
          Matrix rhs = ract_mor(M, rmassoc(M, A, X, Y), ract(M, A, XY), ract(M, AX, Y), identity_on(M.field(), Z), Z,
                                Z) *
                       rmassoc(M, A, XY, Z);
          if (lhs != rhs)
            rep.add("right mixed pentagon violated at (" + M.simples[i] + "," + C.simples[x] + "," + C.simples[y] +
                    "," + C.simples[z] + ")");
        }
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i) {
      Obj X{x}, A{i}, U = C.unit_obj();
      Obj AX = ract(M, A, X);
      Matrix u1 = ract_mor(M, unitor(M, A), A, A, identity_on(M.field(), X), X, X) * rmassoc(M, A, U, X);
      Matrix u2 = unitor(M, AX) * rmassoc(M, A, X, U);
      if (u1 != identity_on(M.field(), AX)) rep.add("right unit coherence (M,1,X) violated at " + M.tuple_str(C.unit, x, i));
      if (u2 != identity_on(M.field(), AX)) rep.add("right unit coherence (M,X,1) violated at " + M.tuple_str(x, C.unit, i));
    }
  return rep;
}

/// Exhaustive axiom check for either orientation; empty report iff valid.
inline ValidationReport validate_module(const ModuleCategory& M) {
  return M.right ? validate_right_module(M) : validate_left_module(M);
}

// ---------------------------------------------------------------------------
// Constructions.

/// C as a left module over itself: action = fusion, L = F, unit scalars 1.
inline ModuleCategory regular_module(const CategoryPtr& C) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < C->rank(); ++a)
    for (int b = 0; b < C->rank(); ++b)
      for (int c : C->fusion.outputs(a, b)) triples.push_back({a, b, c});
  ModuleCategory M = ModuleCategory::make(C->name + "_regular", C, C->simples, false, triples);
  const int n = C->rank();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int z = 0; z < n; ++z)
            for (int t = 0; t < n; ++t)
              if (M.l_admissible(x, y, i, j, z, t)) M.L_ref(x, y, i, j, z, t) = C->F(x, y, i, t, z, j);
  return M;
}

/// The opposite module category: a left module becomes a right one and vice versa.
inline ModuleCategory opposite_module(const ModuleCategory& M) {
  const auto& C = *M.base;
  const int nc = C.rank(), nm = M.rank();
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i)
      for (int j : M.act(C.dual[x], i)) triples.push_back(M.right ? std::array<int, 3>{x, i, j} : std::array<int, 3>{i, x, j});
  ModuleCategory R = ModuleCategory::make(M.name + "_op", M.base, M.simples, !M.right, triples);
  for (int i = 0; i < nm; ++i) R.unit_scalars[i] = M.unit_scalars[i].inverse();
  for (auto& v : R.l_symbols) v = R.field()->zero();
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y) {
      Obj X{x}, Y{y}, Xd{C.dual[x]}, Yd{C.dual[y]};
      Obj XY = tensor(C, X, Y), dXY = dual_obj(C, XY), YdXd = tensor(C, Yd, Xd);
      Matrix phi = phi_r_mor(C, X, Y);
      for (int i = 0; i < nm; ++i) {
        Obj A{i};
        Matrix nu;
        if (!M.right) {
          // nu = m_{Y*,X*,A} (phi^r ▷ id): (X⊗Y)*▷A -> Y*▷(X*▷A)
          nu = massoc(M, Yd, Xd, A) * act_id(M, phi, dXY, YdXd, A);
        } else {
          // nu = m~_{A,Y*,X*} (id ◁ phi^r): A◁(X⊗Y)* -> (A◁Y*)◁X*
          nu = rmassoc(M, A, Yd, Xd) * ract_mor(M, identity_on(M.field(), A), A, A, phi, dXY, YdXd);
        }
        Matrix s = nu.inverse().transpose();
        // Columns run over paths (Z, t) of A◁(X⊗Y); rows over paths (j, t) of the double action.
        size_t col = 0;
        for (size_t kz = 0; kz < XY.size(); ++kz) {
          int z = XY[kz];
          for (int t : R.act(z, i)) {
            size_t row = 0;
            if (R.right) {
              for (int j : R.act(x, i))
                for (int t2 : R.act(y, j)) {
                  if (t2 == t && !s(row, col).is_zero()) R.L_ref(x, y, i, j, z, t) = s(row, col);
                  ++row;
                }
            } else {
              for (int j : R.act(y, i))
                for (int t2 : R.act(x, j)) {
                  if (t2 == t && !s(row, col).is_zero()) R.L_ref(x, y, i, j, z, t) = s(row, col);
                  ++row;
                }
            }
            ++col;
          }
        }
      }
    }
  return R;
}

/// Restricts the base to the labels in sub (must contain the unit, closed under ⊗ and duals).
inline ModuleCategory restrict_module(const ModuleCategory& M, const std::vector<int>& sub_in) {
  const auto& C = *M.base;
  std::set<int> sub(sub_in.begin(), sub_in.end());
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::NotATensorSubcategory, why); };
  for (int a : sub)
    if (a < 0 || a >= C.rank()) fail("label out of range");
  if (!sub.count(C.unit)) fail("subset does not contain the unit");
  for (int a : sub) {
    if (!sub.count(C.dual[a])) fail("subset not closed under duals at " + C.simples[a]);
    for (int b : sub)
      for (int c : C.fusion.outputs(a, b))
        if (!sub.count(c)) fail("subset not closed under fusion at " + C.tuple({a, b}));
  }
  std::vector<int> labels(sub.begin(), sub.end());
  std::vector<int> to_new(C.rank(), -1);
  for (size_t k = 0; k < labels.size(); ++k) to_new[labels[k]] = static_cast<int>(k);
  std::vector<std::string> names;
  std::vector<int> dual;
  std::vector<std::array<int, 3>> fus;
  for (int a : labels) {
    names.push_back(C.simples[a]);
    dual.push_back(to_new[C.dual[a]]);
    for (int b : labels)
      for (int c : C.fusion.outputs(a, b)) fus.push_back({to_new[a], to_new[b], to_new[c]});
  }
  FusionCategory D = FusionCategory::make(C.name + "_sub", C.field, names, to_new[C.unit], dual, fus);
  const int nd = D.rank();
  for (int a = 0; a < nd; ++a)
    for (int b = 0; b < nd; ++b)
      for (int c = 0; c < nd; ++c)
        for (int d = 0; d < nd; ++d)
          for (int e = 0; e < nd; ++e)
            for (int f = 0; f < nd; ++f)
              if (D.admissible(a, b, c, d, e, f))
                D.F_ref(a, b, c, d, e, f) = C.F(labels[a], labels[b], labels[c], labels[d], labels[e], labels[f]);
  attach_duality(D);
  auto Dp = std::make_shared<const FusionCategory>(std::move(D));
  std::vector<std::array<int, 3>> acts;
  const int nm = M.rank();
  for (int x : labels)
    for (int i = 0; i < nm; ++i)
      for (int j : M.act(x, i))
        acts.push_back(M.right ? std::array<int, 3>{i, to_new[x], j} : std::array<int, 3>{to_new[x], i, j});
  ModuleCategory R = ModuleCategory::make(M.name + "_restricted", Dp, M.simples, M.right, acts);
  R.unit_scalars = M.unit_scalars;
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
          for (int z = 0; z < nd; ++z)
            for (int t = 0; t < nm; ++t)
              if (R.l_admissible(x, y, i, j, z, t)) R.L_ref(x, y, i, j, z, t) = M.L(labels[x], labels[y], i, j, labels[z], t);
  return R;
}

// ---------------------------------------------------------------------------
// Internal Hom.

/// uhom(A, V) for list objects: paths (alpha, nu, Z) with n_{Z,a_alpha}^{v_nu} = 1, Z ascending.
inline Obj uhom_obj(const ModuleCategory& M, const Obj& A, const Obj& V) {
  Obj out;
  for (int a : A)
    for (int v : V)
      for (int z = 0; z < M.base->rank(); ++z)
        if (M.n(z, a, v)) out.push_back(z);
  return out;
}

/// Position of the path (alpha, nu, Z) inside uhom_obj(A, V); -1 if absent.
inline long uhom_pos(const ModuleCategory& M, const Obj& A, const Obj& V, size_t alpha, size_t nu, int z) {
  long pos = 0;
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t v = 0; v < V.size(); ++v)
      for (int w = 0; w < M.base->rank(); ++w)
        if (M.n(w, A[a], V[v])) {
          if (a == alpha && v == nu && w == z) return pos;
          ++pos;
        }
  return -1;
}

/// psi^Z_{A,V}: Hom_M(Z▷A, V) -> Hom_C(Z, uhom(A, V)) on the canonical bases.
inline Matrix uhom_psi(const ModuleCategory& M, const Obj& Z, const Obj& A, const Obj& V, const Matrix& h) {
  Obj U = uhom_obj(M, A, V);
  Layout za = product_layout(M.action, Z, A);
  Matrix out(M.field(), U.size(), Z.size());
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t v = 0; v < V.size(); ++v)
      for (size_t k = 0; k < Z.size(); ++k) {
        if (!M.n(Z[k], A[a], V[v])) continue;
        long r = uhom_pos(M, A, V, a, v, Z[k]);
        long c = za.pos(M.action, Z, A, k, a, V[v]);
        out(r, k) = h(v, c);
      }
  return out;
}

/// phi^Z_{A,V}: Hom_C(Z, uhom(A, V)) -> Hom_M(Z▷A, V), the inverse of uhom_psi.
inline Matrix uhom_phi(const ModuleCategory& M, const Obj& Z, const Obj& A, const Obj& V, const Matrix& g) {
  Layout za = product_layout(M.action, Z, A);
  Matrix out(M.field(), V.size(), za.obj.size());
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t v = 0; v < V.size(); ++v)
      for (size_t k = 0; k < Z.size(); ++k) {
        if (!M.n(Z[k], A[a], V[v])) continue;
        long r = uhom_pos(M, A, V, a, v, Z[k]);
        long c = za.pos(M.action, Z, A, k, a, V[v]);
        out(v, c) = g(r, k);
      }
  return out;
}

/// uhom(A, g) for g: V -> V2 (covariant in the second argument).
inline Matrix uhom_map2(const ModuleCategory& M, const Obj& A, const Matrix& g, const Obj& V, const Obj& V2) {
  Obj src = uhom_obj(M, A, V), dst = uhom_obj(M, A, V2);
  Matrix out(M.field(), dst.size(), src.size());
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t v = 0; v < V.size(); ++v)
      for (size_t v2 = 0; v2 < V2.size(); ++v2) {
        if (g(v2, v).is_zero()) continue;
        for (int z = 0; z < M.base->rank(); ++z)
          if (M.n(z, A[a], V[v])) out(uhom_pos(M, A, V2, a, v2, z), uhom_pos(M, A, V, a, v, z)) = g(v2, v);
      }
  return out;
}

/// uhom(f, V) for f: A -> A2 (contravariant in the first argument): uhom(A2, V) -> uhom(A, V).
inline Matrix uhom_map1(const ModuleCategory& M, const Matrix& f, const Obj& A, const Obj& A2, const Obj& V) {
  Obj src = uhom_obj(M, A2, V), dst = uhom_obj(M, A, V);
  Matrix out(M.field(), dst.size(), src.size());
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t a2 = 0; a2 < A2.size(); ++a2) {
      if (f(a2, a).is_zero()) continue;
      for (size_t v = 0; v < V.size(); ++v)
        for (int z = 0; z < M.base->rank(); ++z)
          if (M.n(z, A[a], V[v])) out(uhom_pos(M, A, V, a, v, z), uhom_pos(M, A2, V, a2, v, z)) = f(a2, a);
    }
  return out;
}

/// Counit uhom(A, V)▷A -> V.
inline Matrix uhom_counit(const ModuleCategory& M, const Obj& A, const Obj& V) {
  Obj U = uhom_obj(M, A, V);
  return uhom_phi(M, U, A, V, identity_on(M.field(), U));
}

/// Unit W -> uhom(A, W▷A).
inline Matrix uhom_unit(const ModuleCategory& M, const Obj& W, const Obj& A) {
  Obj WA = act(M, W, A);
  return uhom_psi(M, W, A, WA, identity_on(M.field(), WA));
}

/// Multiplicity table of the internal Hom together with its adjunction check.
struct InternalHomTable {
  std::vector<std::vector<std::vector<int>>> mult;  ///< mult[i][j][X]

  const std::vector<int>& operator()(int i, int j) const { return mult[i][j]; }
};

inline InternalHomTable internal_hom(const ModuleCategory& M) {
  InternalHomTable T;
  const int nm = M.rank(), nc = M.base->rank();
  T.mult.assign(nm, std::vector<std::vector<int>>(nm, std::vector<int>(nc, 0)));
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) T.mult[i][j] = multiplicities(uhom_obj(M, {i}, {j}), nc);
  return T;
}

/// Checks phi∘psi = id and psi∘phi = id on every 1-dimensional adjunction space.
inline ValidationReport check_internal_hom_adjunction(const ModuleCategory& M) {
  ValidationReport rep;
  const int nm = M.rank(), nc = M.base->rank();
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i)
      for (int j = 0; j < nm; ++j) {
        Obj Z{x}, A{i}, V{j};
        Obj ZA = act(M, Z, A), U = uhom_obj(M, A, V);
        auto hb = hom_basis(ZA, V);
        auto gb = hom_basis(Z, U);
        if (hb.size() != gb.size() || hb.size() != static_cast<size_t>(M.n(x, i, j)))
          rep.add("internal Hom dimension mismatch at " + M.tuple_str(x, x, i));
        for (auto [r, c] : hb) {
          Matrix h(M.field(), V.size(), ZA.size());
          h(r, c) = M.field()->one();
          if (uhom_phi(M, Z, A, V, uhom_psi(M, Z, A, V, h)) != h) rep.add("phi∘psi != id");
        }
        for (auto [r, c] : gb) {
          Matrix g(M.field(), U.size(), Z.size());
          g(r, c) = M.field()->one();
          if (uhom_psi(M, Z, A, V, uhom_phi(M, Z, A, V, g)) != g) rep.add("psi∘phi != id");
        }
      }
  return rep;
}

}  // namespace modend
