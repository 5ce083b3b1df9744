/**
 * @file functor.hpp
 * @brief Module functors (F, c) between left module categories over one base.
 *
 * F is stored on simples: F(m_i) is the list of target simples j repeated
 * on_simples[i][j] times, in ascending label order. On a list object F acts
 * summand by summand, and on a label-respecting morphism g it acts by
 * replacing every entry g[b, a] with g[b, a] times the identity of F(label).
 *
 * c[X][i] is the matrix of c_{X,m_i}: F(X▷m_i) -> X▷F(m_i). Its source is the
 * concatenation of F(m_t) over t in X▷m_i (t ascending); its target is the
 * path basis of X▷F(m_i), ordered by summand of F(m_i) and then by output.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/module.hpp"

namespace modend {

class ModuleFunctor {
 public:
  std::string name;
  ModulePtr src;
  ModulePtr dst;
  std::vector<std::vector<int>> on_simples;  ///< on_simples[i][j]
  std::vector<std::vector<Matrix>> c;        ///< c[X][i]

  const FieldPtr& field() const { return src->field(); }

  /// F(m_i) as a list of target simples.
  Obj image(int i) const {
    Obj out;
    for (size_t j = 0; j < on_simples[i].size(); ++j)
      for (int k = 0; k < on_simples[i][j]; ++k) out.push_back(static_cast<int>(j));
    return out;
  }

  /// F(A) for a list object A.
  Obj apply(const Obj& A) const {
    Obj out;
    for (int a : A) {
      Obj fa = image(a);
      out.insert(out.end(), fa.begin(), fa.end());
    }
    return out;
  }

  /// F(g) for a label-respecting g: A -> B.
  Matrix apply(const Matrix& g, const Obj& A, const Obj& B) const {
    Obj FA = apply(A), FB = apply(B);
    Matrix out(field(), FB.size(), FA.size());
    size_t r0 = 0;
    for (size_t b = 0; b < B.size(); ++b) {
      size_t nb = image(B[b]).size();
      size_t c0 = 0;
      for (size_t a = 0; a < A.size(); ++a) {
        size_t na = image(A[a]).size();
        const FieldElement& x = g(b, a);
        if (!x.is_zero()) {
          if (A[a] != B[b]) throw Error(ErrorKind::DimensionMismatch, "morphism does not respect labels");
          for (size_t k = 0; k < na; ++k) out(r0 + k, c0 + k) = x;
        }
        c0 += na;
      }
      r0 += nb;
    }
    return out;
  }

  /// c_{X,A}: F(X▷A) -> X▷F(A) on list objects, block diagonal in the (X-summand, A-summand) pairs.
  Matrix coherence(const Obj& X, const Obj& A) const {
    const ModuleCategory& M = *src;
    const ModuleCategory& N = *dst;
    Obj FXA = apply(act(M, X, A));
    Obj XFA = act(N, X, apply(A));
    Matrix out(field(), XFA.size(), FXA.size());
    size_t r0 = 0, c0 = 0;
    for (int x : X)
      for (int a : A) {
        const Matrix& blk = c[x][a];
        out.set_block(r0, c0, blk);
        r0 += blk.rows();
        c0 += blk.cols();
      }
    return out;
  }

  /// Source list F(X▷m_i) and target list X▷F(m_i) of c[X][i].
  Obj c_source(int x, int i) const { return apply(act(*src, {x}, {i})); }
  Obj c_target(int x, int i) const { return act(*dst, {x}, image(i)); }
};

using FunctorPtr = std::shared_ptr<const ModuleFunctor>;

/// Matches the k-th occurrence of each label in src with its k-th occurrence in dst.
inline Matrix label_matching(const FieldPtr& f, const Obj& src, const Obj& dst) {
  if (src.size() != dst.size()) throw Error(ErrorKind::DimensionMismatch, "lists of different length");
  Matrix out(f, dst.size(), src.size());
  std::vector<bool> used(dst.size(), false);
  for (size_t s = 0; s < src.size(); ++s) {
    size_t r = 0;
    while (r < dst.size() && (used[r] || dst[r] != src[s])) ++r;
    if (r == dst.size()) throw Error(ErrorKind::DimensionMismatch, "lists are not isomorphic");
    used[r] = true;
    out(r, s) = f->one();
  }
  return out;
}

/// Functor with the given on_simples and every c block set to the label matching.
inline ModuleFunctor functor_with_default_c(std::string name, ModulePtr src, ModulePtr dst,
                                            std::vector<std::vector<int>> on_simples) {
  ModuleFunctor F;
  F.name = std::move(name);
  F.src = std::move(src);
  F.dst = std::move(dst);
  F.on_simples = std::move(on_simples);
  const int nc = F.src->base->rank();
  F.c.assign(nc, std::vector<Matrix>(F.src->rank()));
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < F.src->rank(); ++i) {
      Obj s = F.c_source(x, i), t = F.c_target(x, i);
      F.c[x][i] = s.size() == t.size() ? label_matching(F.field(), s, t) : Matrix(F.field(), t.size(), s.size());
    }
  return F;
}

inline ValidationReport validate_functor(const ModuleFunctor& F) {
  ValidationReport rep;
  const ModuleCategory& M = *F.src;
  const ModuleCategory& N = *F.dst;
  if (M.base.get() != N.base.get() && M.base->name != N.base->name) {
    rep.add("source and target are modules over different categories");
    return rep;
  }
  if (M.right || N.right) {
    rep.add("module functors are only supported between left module categories");
    return rep;
  }
  const auto& C = *M.base;
  const int nc = C.rank(), nm = M.rank();
  if (static_cast<int>(F.on_simples.size()) != nm) rep.add("on_simples has wrong number of rows");
  for (const auto& row : F.on_simples) {
    if (static_cast<int>(row.size()) != N.rank()) rep.add("on_simples has a row of wrong length");
    for (int v : row)
      if (v < 0) rep.add("on_simples has a negative entry");
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i) {
      const Matrix& b = F.c[x][i];
      Obj s = F.c_source(x, i), t = F.c_target(x, i);
      std::string where = "(" + C.simples[x] + "," + M.simples[i] + ")";
      if (!respects_labels(b, s, t)) {
        rep.add("c block at " + where + " has wrong shape or mixes labels");
        continue;
      }
      if (b.rank() != b.rows() || b.rows() != b.cols()) rep.add("c block at " + where + " is not invertible");
    }
  if (!rep.ok()) return rep;
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int i = 0; i < nm; ++i) {
        Obj X{x}, Y{y}, A{i};
        Obj XY = tensor(C, X, Y), YA = act(M, Y, A), FA = F.apply(A);
        Matrix lhs = id_act(N, X, F.coherence(Y, A), F.apply(YA), act(N, Y, FA)) * F.coherence(X, YA) *
                     F.apply(massoc(M, X, Y, A), act(M, XY, A), act(M, X, YA));
        Matrix rhs = massoc(N, X, Y, FA) * F.coherence(XY, A);
        if (lhs != rhs)
          rep.add("module functor coherence violated at (" + C.simples[x] + "," + C.simples[y] + "," + M.simples[i] +
                  ")");
      }
  for (int i = 0; i < nm; ++i) {
    Obj A{i};
    Obj FA = F.apply(A);
    Matrix lhs = unitor(N, FA) * F.coherence(C.unit_obj(), A);
    Matrix rhs = F.apply(unitor(M, A), A, A);
    if (lhs != rhs) rep.add("module functor unit coherence violated at " + M.simples[i]);
  }
  return rep;
}

inline ModuleFunctor identity_functor(const ModulePtr& M) {
  std::vector<std::vector<int>> id(M->rank(), std::vector<int>(M->rank(), 0));
  for (int i = 0; i < M->rank(); ++i) id[i][i] = 1;
  return functor_with_default_c("id", M, M, id);
}

/// −⊗y on the regular module, with c_{X,i} the associator a_{X,i,y}.
inline ModuleFunctor act_right_functor(const ModulePtr& R, int y) {
  const auto& C = *R->base;
  if (y < 0 || y >= C.rank()) throw Error(ErrorKind::UnknownLabel, "label out of range");
  std::vector<std::vector<int>> f(C.rank(), std::vector<int>(C.rank(), 0));
  for (int i = 0; i < C.rank(); ++i)
    for (int j : C.fusion.outputs(i, y)) f[i][j] = 1;
  ModuleFunctor F = functor_with_default_c("right_" + C.simples[y], R, R, f);
  for (int x = 0; x < C.rank(); ++x)
    for (int i = 0; i < C.rank(); ++i) F.c[x][i] = assoc(C, {x}, {i}, {y});
  return F;
}

namespace detail {

/// Permutation sending a list to its stable ascending sort.
inline Matrix sorting_permutation(const FieldPtr& f, const Obj& A) {
  std::vector<size_t> idx(A.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return A[a] < A[b]; });
  Matrix P(f, A.size(), A.size());
  for (size_t r = 0; r < idx.size(); ++r) P(r, idx[r]) = f->one();
  return P;
}

}  // namespace detail

/// G∘F with on_simples multiplied and c_{X,M} = d_{X,F(M)} G(c_{X,M}) up to the canonical reordering.
inline ModuleFunctor compose_functors(const ModuleFunctor& G, const ModuleFunctor& F) {
  if (F.dst.get() != G.src.get() && F.dst->name != G.src->name)
    throw Error(ErrorKind::SourceTargetMismatch, "cannot compose " + G.name + " after " + F.name);
  const int ni = F.src->rank(), nj = F.dst->rank(), nk = G.dst->rank();
  std::vector<std::vector<int>> prod(ni, std::vector<int>(nk, 0));
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j)
      for (int k = 0; k < nk; ++k) prod[i][k] += F.on_simples[i][j] * G.on_simples[j][k];
  ModuleFunctor E = functor_with_default_c(G.name + "*" + F.name, F.src, G.dst, prod);
  const auto& C = *F.src->base;
  const FieldPtr& k = F.field();
  // P_A: G(F(A)) -> E(A), block diagonal over the summands of A.
  auto perm = [&](const Obj& A) {
    Obj gfa = G.apply(F.apply(A));
    Matrix P(k, gfa.size(), gfa.size());
    size_t off = 0;
    for (int a : A) {
      Obj part = G.apply(F.image(a));
      P.set_block(off, off, detail::sorting_permutation(k, part));
      off += part.size();
    }
    return P;
  };
  for (int x = 0; x < C.rank(); ++x)
    for (int i = 0; i < ni; ++i) {
      Obj X{x}, A{i};
      Obj XA = act(*F.src, X, A);
      Obj FA = F.apply(A);
      Matrix Gc = G.apply(F.coherence(X, A), F.apply(XA), act(*F.dst, X, FA));
      Matrix d = G.coherence(X, FA);
      Matrix idP = id_act(*G.dst, X, perm(A), G.apply(FA), E.image(i));
      E.c[x][i] = idP * d * Gc * perm(XA).transpose();
    }
  return E;
}

}  // namespace modend
