/**
 * @file gauge.hpp
 * @brief Basis rescalings of the 1-dimensional Hom spaces and relabelings of module simples.
 *
 * A gauge for a category assigns a nonzero scalar u(a,b,c) to each admissible
 * fusion channel a⊗b -> c (trivial when a or b is the unit); a gauge for a
 * module assigns v(x,i,t) to each action channel x▷m_i -> m_t (trivial when x
 * is the unit). Rescaling the chosen basis vectors transforms
 *
 *   F'(a,b,c,d,e,f) = F · u(a,b,e) u(e,c,d) / (u(b,c,f) u(a,f,d))
 *   L'(x,y,i,j,z,t) = L · u(x,y,z) v(z,i,t) / (v(y,i,j) v(x,j,t))
 *
 * and a module functor's c blocks have source columns multiplied by the
 * source-module scalar and target rows divided by the target-module scalar.
 * All reported dimensions are invariant under these transformations.
 */

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "modend/endengine.hpp"
#include "modend/functor.hpp"
#include "modend/module.hpp"

namespace modend {

using GaugeTable = std::map<std::tuple<int, int, int>, FieldElement>;

namespace detail {

inline FieldElement gauge_at(const GaugeTable& g, int a, int b, int c, const FieldPtr& f) {
  auto it = g.find({a, b, c});
  return it == g.end() ? f->one() : it->second;
}

}  // namespace detail

/// Rescales the fusion channels of C by u; duality data is recomputed.
inline FusionCategory gauge_category(const FusionCategory& C, const GaugeTable& u) {
  FusionCategory D = C;
  const int n = C.rank();
  auto U = [&](int a, int b, int c) { return detail::gauge_at(u, a, b, c, C.field); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (C.admissible(a, b, c, d, e, f))
                D.F_ref(a, b, c, d, e, f) = C.F(a, b, c, d, e, f) * U(a, b, e) * U(e, c, d) / (U(b, c, f) * U(a, f, d));
  attach_duality(D);
  return D;
}

/// Rescales the action channels of M by v over the already gauged base (u must match the base change).
inline ModuleCategory gauge_module(const ModuleCategory& M, CategoryPtr new_base, const GaugeTable& u,
                                   const GaugeTable& v) {
  ModuleCategory R = M;
  R.base = std::move(new_base);
  const int nc = M.base->rank(), nm = M.rank();
  const FieldPtr& k = M.field();
  auto U = [&](int a, int b, int c) { return detail::gauge_at(u, a, b, c, k); };
  auto V = [&](int a, int b, int c) { return detail::gauge_at(v, a, b, c, k); };
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
          for (int z = 0; z < nc; ++z)
            for (int t = 0; t < nm; ++t)
              if (M.l_admissible(x, y, i, j, z, t))
                R.L_ref(x, y, i, j, z, t) = M.L(x, y, i, j, z, t) * U(x, y, z) * V(z, i, t) / (V(y, i, j) * V(x, j, t));
  return R;
}

/// Transports a functor's c blocks to gauged source and target modules.
inline ModuleFunctor gauge_functor(const ModuleFunctor& F, ModulePtr new_src, ModulePtr new_dst, const GaugeTable& vs,
                                   const GaugeTable& vt) {
  ModuleFunctor G = F;
  G.src = std::move(new_src);
  G.dst = std::move(new_dst);
  const FieldPtr& k = F.field();
  const int nc = F.src->base->rank();
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < F.src->rank(); ++i) {
      Matrix& b = G.c[x][i];
      // Source columns: F(m_t) parts for t in x▷m_i.
      size_t col = 0;
      for (int t : F.src->act(x, i)) {
        FieldElement s = detail::gauge_at(vs, x, i, t, k);
        for (size_t q = 0; q < F.image(t).size(); ++q, ++col)
          for (size_t r = 0; r < b.rows(); ++r)
            if (!b(r, col).is_zero()) b(r, col) *= s;
      }
      // Target rows: paths (entry j of F(m_i), output s).
      size_t row = 0;
      for (int j : F.image(i))
        for (int s : F.dst->act(x, j)) {
          FieldElement inv = detail::gauge_at(vt, x, j, s, k).inverse();
          for (size_t c = 0; c < b.cols(); ++c)
            if (!b(row, c).is_zero()) b(row, c) *= inv;
          ++row;
        }
    }
  return G;
}

/// F conjugated by invertible label-respecting g_i: F(m_i) -> F(m_i); the result is isomorphic to F.
inline ModuleFunctor conjugate_functor(const ModuleFunctor& F, const std::vector<Matrix>& g) {
  ModuleFunctor G = F;
  const int nc = F.src->base->rank();
  auto on_list = [&](const Obj& A, bool inverse) {
    Obj FA = F.apply(A);
    Matrix out(F.field(), FA.size(), FA.size());
    size_t off = 0;
    for (int a : A) {
      Matrix blk = inverse ? g[a].inverse() : g[a];
      out.set_block(off, off, blk);
      off += blk.rows();
    }
    return out;
  };
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < F.src->rank(); ++i) {
      Obj X{x}, A{i}, XA = act(*F.src, X, A);
      G.c[x][i] = id_act(*F.dst, X, g[i], F.image(i), F.image(i)) * F.c[x][i] * on_list(XA, true);
    }
  return G;
}

/// Module with simples renamed by the permutation perm (old label i becomes perm[i]).
inline ModuleCategory permute_module(const ModuleCategory& M, const std::vector<int>& perm) {
  const int nc = M.base->rank(), nm = M.rank();
  std::vector<std::string> names(nm);
  for (int i = 0; i < nm; ++i) names[perm[i]] = M.simples[i];
  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i)
      for (int j : M.act(x, i))
        triples.push_back(M.right ? std::array<int, 3>{perm[i], x, perm[j]} : std::array<int, 3>{x, perm[i], perm[j]});
  ModuleCategory R = ModuleCategory::make(M.name, M.base, names, M.right, triples);
  for (int i = 0; i < nm; ++i) R.unit_scalars[perm[i]] = M.unit_scalars[i];
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nc; ++y)
      for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
          for (int z = 0; z < nc; ++z)
            for (int t = 0; t < nm; ++t)
              if (M.l_admissible(x, y, i, j, z, t)) R.L_ref(x, y, perm[i], perm[j], z, perm[t]) = M.L(x, y, i, j, z, t);
  return R;
}

/// Transports an endofunctor of M to permute_module(M, perm).
inline ModuleFunctor permute_functor(const ModuleFunctor& F, ModulePtr new_module, const std::vector<int>& perm) {
  const int nm = F.src->rank(), nc = F.src->base->rank();
  std::vector<std::vector<int>> on(nm, std::vector<int>(nm, 0));
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) on[perm[i]][perm[j]] = F.on_simples[i][j];
  ModuleFunctor G = functor_with_default_c(F.name, new_module, new_module, on);
  // Source entries are keyed by (t, j, copy); target entries by (j, copy, s).
  auto src_keys = [&](const ModuleFunctor& H, int x, int i, const std::vector<int>* p) {
    std::vector<std::tuple<int, int, int>> keys;
    for (int t : H.src->act(x, i)) {
      Obj im = H.image(t);
      for (size_t q = 0; q < im.size(); ++q) {
        int copy = static_cast<int>(q - positions_of(im, im[q]).front());
        keys.emplace_back(p ? (*p)[t] : t, p ? (*p)[im[q]] : im[q], copy);
      }
    }
    return keys;
  };
  auto dst_keys = [&](const ModuleFunctor& H, int x, int i, const std::vector<int>* p) {
    std::vector<std::tuple<int, int, int>> keys;
    Obj im = H.image(i);
    for (size_t q = 0; q < im.size(); ++q) {
      int copy = static_cast<int>(q - positions_of(im, im[q]).front());
      for (int s : H.dst->act(x, im[q])) keys.emplace_back(p ? (*p)[im[q]] : im[q], copy, p ? (*p)[s] : s);
    }
    return keys;
  };
  for (int x = 0; x < nc; ++x)
    for (int i = 0; i < nm; ++i) {
      auto so = src_keys(F, x, i, &perm), do_ = dst_keys(F, x, i, &perm);
      auto sn = src_keys(G, x, perm[i], nullptr), dn = dst_keys(G, x, perm[i], nullptr);
      Matrix& b = G.c[x][perm[i]];
      b = Matrix(F.field(), dn.size(), sn.size());
      for (size_t r = 0; r < do_.size(); ++r)
        for (size_t c = 0; c < so.size(); ++c) {
          size_t r2 = std::find(dn.begin(), dn.end(), do_[r]) - dn.begin();
          size_t c2 = std::find(sn.begin(), sn.end(), so[c]) - sn.begin();
          b(r2, c2) = F.c[x][i](r, c);
        }
    }
  return G;
}

/// S ⊗ k^r: each carrier coordinate and each condition row replicated r times.
inline DinaturalSystem pushforward(const DinaturalSystem& sys, size_t r) {
  DinaturalSystem out = sys;
  out.carrier = Carrier{};
  for (const auto& b : sys.carrier.blocks) {
    std::vector<std::pair<size_t, size_t>> basis;
    for (auto [row, col] : b.basis)
      for (size_t q = 0; q < r; ++q) basis.emplace_back(row, col * r + q);
    out.carrier.add(b.rows, b.cols * r, basis);
  }
  for (auto& c : out.conditions) c.map = kron(c.map, Matrix::identity(sys.field, r));
  return out;
}

}  // namespace modend
