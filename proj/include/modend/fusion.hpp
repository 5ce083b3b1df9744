/**
 * @file fusion.hpp
 * @brief Skeletal multiplicity-free fusion categories: data, validation, duality.
 *
 * Simples are labelled 0..n-1. The F-symbol F(a,b,c,d,e,f) is the coefficient
 * of the path a(bc -> f) -> d in the image of the path (ab -> e)c -> d under the
 * associator a_{a,b,c}. F-symbols are stored densely; inadmissible entries are
 * zero.
 *
 * Duality conventions: both duals of a share the label dual(a). The right
 * coevaluation scalars are normalized to 1 and the right evaluation scalars are
 * solved from the zig-zag identities. The left duality of a is the right
 * duality of dual(a) read the other way round (left_ev[a] = ev[dual a],
 * left_coev[a] = coev[dual a]); with this choice the canonical isomorphisms
 * X -> *(X*) and (*X)* -> X are identity label maps. The isomorphisms
 * phi^r: (X⊗Y)* -> Y*⊗X* and phi^l: *(X⊗Y) -> *Y⊗*X are diagonal on paths; their
 * scalars are fixed by the evaluation identity for tensor products.
 */

#pragma once

#include <cmath>

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/matrix.hpp"
#include "modend/skeletal.hpp"

namespace modend {

struct DualityData {
  std::vector<FieldElement> ev, coev, left_ev, left_coev;
  std::vector<FieldElement> phi_r, phi_l;  ///< dense [a][b][c], meaningful when N_{ab}^c = 1
  /// Positive dimension function (a ring character, gauge invariant); empty if it is not found in the field.
  std::vector<FieldElement> dim;
};

class FusionCategory {
 public:
  std::string name;
  FieldPtr field;
  std::vector<std::string> simples;
  int unit = 0;
  std::vector<int> dual;
  Pairing fusion;
  std::vector<FieldElement> f_symbols;
  std::optional<DualityData> duality;

  /// Builds a category from its fusion table with every admissible F-symbol set to 1.
  static FusionCategory make(std::string name, FieldPtr field, std::vector<std::string> simples, int unit,
                             std::vector<int> dual, const std::vector<std::array<int, 3>>& fusion_triples) {
    FusionCategory c;
    c.name = std::move(name);
    c.field = std::move(field);
    c.simples = std::move(simples);
    c.unit = unit;
    c.dual = std::move(dual);
    int n = c.rank();
    c.fusion = Pairing(n, n, n);
    for (const auto& t : fusion_triples) c.fusion.set(t[0], t[1], t[2]);
    c.f_symbols.assign(static_cast<size_t>(n) * n * n * n * n * n, c.field->zero());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                if (c.admissible(a, b, cc, d, e, f)) c.F_ref(a, b, cc, d, e, f) = c.field->one();
    return c;
  }

  int rank() const { return static_cast<int>(simples.size()); }

  int label(const std::string& s) const {
    for (int i = 0; i < rank(); ++i)
      if (simples[i] == s) return i;
    throw Error(ErrorKind::UnknownLabel, "no simple '" + s + "' in category " + name);
  }

  bool N(int a, int b, int c) const { return fusion.has(a, b, c); }

  bool admissible(int a, int b, int c, int d, int e, int f) const {
    return N(a, b, e) && N(e, c, d) && N(b, c, f) && N(a, f, d);
  }

  size_t f_index(int a, int b, int c, int d, int e, int f) const {
    size_t n = simples.size();
    return ((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
  }

  const FieldElement& F(int a, int b, int c, int d, int e, int f) const { return f_symbols[f_index(a, b, c, d, e, f)]; }
  FieldElement& F_ref(int a, int b, int c, int d, int e, int f) { return f_symbols[f_index(a, b, c, d, e, f)]; }

  const DualityData& rigid() const {
    if (!duality) throw Error(ErrorKind::InconsistentRigidity, "duality data not computed for " + name);
    return *duality;
  }

  Obj unit_obj() const { return Obj{unit}; }

  std::string tuple(std::initializer_list<int> labels) const {
    std::string s = "(";
    bool first = true;
    for (int l : labels) {
      if (!first) s += ",";
      s += simples[l];
      first = false;
    }
    return s + ")";
  }
};

// ---------------------------------------------------------------------------
// Rebracketing matrices shared by categories and module categories.

/// Matrix (A*B)*C -> A*(B*C); coef(a,b,c,d,e,f) with e the (A*B) output and f the (B*C) output.
template <class Coef>
Matrix rebracket_forward(const FieldPtr& k, const Pairing& pAB, const Pairing& pEC, const Pairing& pBC,
                         const Pairing& pAF, const Obj& A, const Obj& B, const Obj& C, Coef coef) {
  Layout ab = product_layout(pAB, A, B);
  Layout src = product_layout(pEC, ab.obj, C);
  Layout bc = product_layout(pBC, B, C);
  Layout dst = product_layout(pAF, A, bc.obj);
  Matrix out(k, dst.obj.size(), src.obj.size());
  for (size_t ia = 0; ia < A.size(); ++ia)
    for (size_t ib = 0; ib < B.size(); ++ib)
      for (size_t ic = 0; ic < C.size(); ++ic) {
        int a = A[ia], b = B[ib], c = C[ic];
        for (int e : pAB.outputs(a, b)) {
          size_t ie = static_cast<size_t>(ab.pos(pAB, A, B, ia, ib, e));
          for (int d : pEC.outputs(e, c)) {
            long s = src.pos(pEC, ab.obj, C, ie, ic, d);
            for (int f : pBC.outputs(b, c)) {
              if (!pAF.has(a, f, d)) continue;
              size_t jf = static_cast<size_t>(bc.pos(pBC, B, C, ib, ic, f));
              long r = dst.pos(pAF, A, bc.obj, ia, jf, d);
              out(r, s) = coef(a, b, c, d, e, f);
            }
          }
        }
      }
  return out;
}

/// Matrix A*(B*C) -> (A*B)*C; coef(a,b,c,d,e,f) is the entry from the f-path to the e-path.
template <class Coef>
Matrix rebracket_backward(const FieldPtr& k, const Pairing& pAB, const Pairing& pEC, const Pairing& pBC,
                          const Pairing& pAF, const Obj& A, const Obj& B, const Obj& C, Coef coef) {
  Layout ab = product_layout(pAB, A, B);
  Layout dst = product_layout(pEC, ab.obj, C);
  Layout bc = product_layout(pBC, B, C);
  Layout src = product_layout(pAF, A, bc.obj);
  Matrix out(k, dst.obj.size(), src.obj.size());
  for (size_t ia = 0; ia < A.size(); ++ia)
    for (size_t ib = 0; ib < B.size(); ++ib)
      for (size_t ic = 0; ic < C.size(); ++ic) {
        int a = A[ia], b = B[ib], c = C[ic];
        for (int e : pAB.outputs(a, b)) {
          size_t ie = static_cast<size_t>(ab.pos(pAB, A, B, ia, ib, e));
          for (int d : pEC.outputs(e, c)) {
            long r = dst.pos(pEC, ab.obj, C, ie, ic, d);
            for (int f : pBC.outputs(b, c)) {
              if (!pAF.has(a, f, d)) continue;
              size_t jf = static_cast<size_t>(bc.pos(pBC, B, C, ib, ic, f));
              long s = src.pos(pAF, A, bc.obj, ia, jf, d);
              out(r, s) = coef(a, b, c, d, e, f);
            }
          }
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor calculus in C.

inline Obj tensor(const FusionCategory& C, const Obj& A, const Obj& B) { return product(C.fusion, A, B); }

inline Matrix tensor_mor(const FusionCategory& C, const Matrix& f, const Obj& A, const Obj& A2, const Matrix& g,
                         const Obj& B, const Obj& B2) {
  return product_mor(C.fusion, f, A, A2, g, B, B2);
}

/// id_A ⊗ g
inline Matrix id_tensor(const FusionCategory& C, const Obj& A, const Matrix& g, const Obj& B, const Obj& B2) {
  return tensor_mor(C, identity_on(C.field, A), A, A, g, B, B2);
}

/// f ⊗ id_B
inline Matrix tensor_id(const FusionCategory& C, const Matrix& f, const Obj& A, const Obj& A2, const Obj& B) {
  return tensor_mor(C, f, A, A2, identity_on(C.field, B), B, B);
}

/// a_{A,B,C}: (A⊗B)⊗C -> A⊗(B⊗C)
inline Matrix assoc(const FusionCategory& C, const Obj& A, const Obj& B, const Obj& D) {
  return rebracket_forward(C.field, C.fusion, C.fusion, C.fusion, C.fusion, A, B, D,
                           [&](int a, int b, int c, int d, int e, int f) { return C.F(a, b, c, d, e, f); });
}

inline Matrix assoc_inv(const FusionCategory& C, const Obj& A, const Obj& B, const Obj& D) {
  return assoc(C, A, B, D).inverse();
}

/// Dual object (left or right): the list of dual labels in the same order.
inline Obj dual_obj(const FusionCategory& C, const Obj& A) {
  Obj out;
  for (int a : A) out.push_back(C.dual[a]);
  return out;
}

namespace detail {

/// Row vector P -> 1 picking the unit path of (p_k, q_k) with scalar s[label].
inline Matrix pairing_to_unit(const FusionCategory& C, const Obj& P, const Obj& Q, const std::vector<FieldElement>& s,
                              bool scalar_from_second) {
  Layout L = product_layout(C.fusion, P, Q);
  Matrix out(C.field, 1, L.obj.size());
  for (size_t k = 0; k < P.size(); ++k) {
    long pos = L.pos(C.fusion, P, Q, k, k, C.unit);
    if (pos < 0) throw Error(ErrorKind::InconsistentRigidity, "dual pair without unit summand");
    out(0, pos) = s[scalar_from_second ? Q[k] : P[k]];
  }
  return out;
}

inline Matrix unit_to_pairing(const FusionCategory& C, const Obj& P, const Obj& Q, const std::vector<FieldElement>& s,
                              bool scalar_from_second) {
  Layout L = product_layout(C.fusion, P, Q);
  Matrix out(C.field, L.obj.size(), 1);
  for (size_t k = 0; k < P.size(); ++k) {
    long pos = L.pos(C.fusion, P, Q, k, k, C.unit);
    if (pos < 0) throw Error(ErrorKind::InconsistentRigidity, "dual pair without unit summand");
    out(pos, 0) = s[scalar_from_second ? Q[k] : P[k]];
  }
  return out;
}

}  // namespace detail

/// ev_A: A*⊗A -> 1 (summand-wise right evaluation).
inline Matrix ev_mor(const FusionCategory& C, const Obj& A) {
  return detail::pairing_to_unit(C, dual_obj(C, A), A, C.rigid().ev, true);
}

/// coev_A: 1 -> A⊗A*
inline Matrix coev_mor(const FusionCategory& C, const Obj& A) {
  return detail::unit_to_pairing(C, A, dual_obj(C, A), C.rigid().coev, false);
}

/// Left evaluation A⊗*A -> 1
inline Matrix left_ev_mor(const FusionCategory& C, const Obj& A) {
  return detail::pairing_to_unit(C, A, dual_obj(C, A), C.rigid().left_ev, false);
}

/// Left coevaluation 1 -> *A⊗A
inline Matrix left_coev_mor(const FusionCategory& C, const Obj& A) {
  return detail::unit_to_pairing(C, dual_obj(C, A), A, C.rigid().left_coev, true);
}

namespace detail {

/// Diagonal path map dual(A⊗B) -> dual(B)⊗dual(A) with scalar table s[a][b][c].
inline Matrix reversal(const FusionCategory& C, const Obj& A, const Obj& B, const std::vector<FieldElement>* s) {
  Layout ab = product_layout(C.fusion, A, B);
  Obj dB = dual_obj(C, B), dA = dual_obj(C, A);
  Layout ba = product_layout(C.fusion, dB, dA);
  Matrix out(C.field, ba.obj.size(), ab.obj.size());
  size_t n = C.simples.size();
  for (size_t ia = 0; ia < A.size(); ++ia)
    for (size_t ib = 0; ib < B.size(); ++ib)
      for (int c : C.fusion.outputs(A[ia], B[ib])) {
        long src = ab.pos(C.fusion, A, B, ia, ib, c);
        long dst = ba.pos(C.fusion, dB, dA, ib, ia, C.dual[c]);
        if (dst < 0) throw Error(ErrorKind::InconsistentRigidity, "fusion table not compatible with duals");
        out(dst, src) = s ? (*s)[(A[ia] * n + B[ib]) * n + c] : C.field->one();
      }
  return out;
}

}  // namespace detail

/// phi^r_{A,B}: (A⊗B)* -> B*⊗A*
inline Matrix phi_r_mor(const FusionCategory& C, const Obj& A, const Obj& B) {
  return detail::reversal(C, A, B, &C.rigid().phi_r);
}

/// phi^l_{A,B}: *(A⊗B) -> *B⊗*A
inline Matrix phi_l_mor(const FusionCategory& C, const Obj& A, const Obj& B) {
  return detail::reversal(C, A, B, &C.rigid().phi_l);
}

// ---------------------------------------------------------------------------
// Validation and duality.

inline ValidationReport validate_fusion(const FusionCategory& C) {
  ValidationReport rep;
  const int n = C.rank();
  if (n == 0) {
    rep.add("category has no simples");
    return rep;
  }
  if (C.unit < 0 || C.unit >= n) {
    rep.add("unit label out of range");
    return rep;
  }
  if (static_cast<int>(C.dual.size()) != n) {
    rep.add("dual map has wrong length");
    return rep;
  }
  for (int a = 0; a < n; ++a) {
    if (C.dual[a] < 0 || C.dual[a] >= n || C.dual[C.dual[a]] != a) rep.add("dual is not an involution at " + C.simples[a]);
    if (!C.N(a, C.unit, a) || C.fusion.outputs(a, C.unit).size() != 1) rep.add("a⊗1 != a at " + C.simples[a]);
    if (!C.N(C.unit, a, a) || C.fusion.outputs(C.unit, a).size() != 1) rep.add("1⊗a != a at " + C.simples[a]);
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (C.N(a, b, C.unit) != (b == C.dual[a])) rep.add("N_{ab}^1 must be 1 iff b = a* at " + C.tuple({a, b}));
      for (int c = 0; c < n; ++c)
        if (C.N(a, b, c) != C.N(C.dual[b], C.dual[a], C.dual[c]))
          rep.add("N_{ab}^c != N_{b*a*}^{c*} at " + C.tuple({a, b, c}));
    }
  if (!rep.ok()) return rep;

  // Unit legs and invertibility of every F-matrix.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::vector<int> es, fs;
          for (int e : C.fusion.outputs(a, b))
            if (C.N(e, c, d)) es.push_back(e);
          for (int f : C.fusion.outputs(b, c))
            if (C.N(a, f, d)) fs.push_back(f);
          if (es.size() != fs.size()) {
            rep.add("F-matrix not square at " + C.tuple({a, b, c, d}));
            continue;
          }
          if (es.empty()) continue;
          Matrix m(C.field, es.size(), fs.size());
          for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = 0; j < fs.size(); ++j) m(i, j) = C.F(a, b, c, d, es[i], fs[j]);
          if (m.rank() != es.size()) rep.add("F-matrix singular at " + C.tuple({a, b, c, d}));
          if (a == C.unit || b == C.unit || c == C.unit)
            for (size_t i = 0; i < es.size(); ++i)
              for (size_t j = 0; j < fs.size(); ++j)
                if (!C.F(a, b, c, d, es[i], fs[j]).is_one())
                  rep.add("F-symbol with a unit leg is not 1 at " + C.tuple({a, b, c, d, es[i], fs[j]}));
        }
  if (!rep.ok()) return rep;

  // Pentagon on every quadruple of simples.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Obj A{a}, B{b}, Cc{c}, D{d};
          Obj AB = tensor(C, A, B), CD = tensor(C, Cc, D), BC = tensor(C, B, Cc);
          Matrix lhs = assoc(C, A, B, CD) * assoc(C, AB, Cc, D);
          Obj BC_D = tensor(C, BC, D);
          Matrix rhs = id_tensor(C, A, assoc(C, B, Cc, D), BC_D, tensor(C, B, CD)) * assoc(C, A, BC, D) *
                       tensor_id(C, assoc(C, A, B, Cc), tensor(C, AB, Cc), tensor(C, A, BC), D);
          Matrix res = lhs - rhs;
          if (!res.is_zero()) {
            // Locate the first offending path by its total label.
            Obj total = tensor(C, tensor(C, AB, Cc), D);
            for (size_t col = 0; col < res.cols(); ++col)
              for (size_t row = 0; row < res.rows(); ++row)
                if (!res(row, col).is_zero()) {
                  rep.add("pentagon violated at " + C.tuple({a, b, c, d}) + " total " + C.simples[total[col]]);
                  goto next;
                }
          }
        next:;
        }
  return rep;
}

namespace detail {

/// Scalar K with (id_X⊗ev_X) a (coev_X⊗id_X) = K id_X when ev = coev = 1.
inline FieldElement zigzag_scalar_right(const FusionCategory& C, int x) {
  Obj X{x}, Xd{C.dual[x]};
  Obj XXd = tensor(C, X, Xd);
  Matrix coev = detail::unit_to_pairing(C, X, Xd, std::vector<FieldElement>(C.rank(), C.field->one()), false);
  Matrix ev = detail::pairing_to_unit(C, Xd, X, std::vector<FieldElement>(C.rank(), C.field->one()), true);
  Matrix step1 = tensor_id(C, coev, C.unit_obj(), XXd, X);
  Matrix step2 = assoc(C, X, Xd, X);
  Matrix step3 = id_tensor(C, X, ev, tensor(C, Xd, X), C.unit_obj());
  Matrix m = step3 * step2 * step1;
  return m(0, 0);
}

/// Scalar K with (ev_X⊗id_{X*}) a^{-1} (id_{X*}⊗coev_X) = K id_{X*} when ev = coev = 1.
inline FieldElement zigzag_scalar_left(const FusionCategory& C, int x) {
  Obj X{x}, Xd{C.dual[x]};
  Matrix coev = detail::unit_to_pairing(C, X, Xd, std::vector<FieldElement>(C.rank(), C.field->one()), false);
  Matrix ev = detail::pairing_to_unit(C, Xd, X, std::vector<FieldElement>(C.rank(), C.field->one()), true);
  Matrix step1 = id_tensor(C, Xd, coev, C.unit_obj(), tensor(C, X, Xd));
  Matrix step2 = assoc_inv(C, Xd, X, Xd);
  Matrix step3 = tensor_id(C, ev, tensor(C, Xd, X), C.unit_obj(), Xd);
  Matrix m = step3 * step2 * step1;
  return m(0, 0);
}

}  // namespace detail

/// Solves ev from the first zig-zag (coev = 1), checks the second, and fixes phi^r, phi^l.
inline DualityData compute_duality(const FusionCategory& C) {
  const int n = C.rank();
  DualityData D;
  D.coev.assign(n, C.field->one());
  D.ev.assign(n, C.field->one());
  for (int x = 0; x < n; ++x) {
    FieldElement k1 = detail::zigzag_scalar_right(C, x);
    FieldElement k2 = detail::zigzag_scalar_left(C, x);
    if (k1.is_zero() || k2.is_zero() || k1 != k2)
      throw Error(ErrorKind::InconsistentRigidity, "zig-zag equations disagree at " + C.simples[x]);
    D.ev[x] = k1.inverse();
  }
  D.left_ev.resize(n);
  D.left_coev.resize(n);
  for (int x = 0; x < n; ++x) {
    D.left_ev[x] = D.ev[C.dual[x]];
    D.left_coev[x] = D.coev[C.dual[x]];
  }
  D.phi_r.assign(static_cast<size_t>(n) * n * n, C.field->zero());
  D.phi_l.assign(static_cast<size_t>(n) * n * n, C.field->zero());

  FusionCategory tmp = C;
  tmp.duality = D;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Obj X{x}, Y{y}, Xd = dual_obj(C, X), Yd = dual_obj(C, Y);
      Obj XY = tensor(C, X, Y);
      Obj dXY = dual_obj(C, XY);
      Obj YdXd = tensor(C, Yd, Xd);
      // Right duals: ev_Y (id ⊗ (ev_X ⊗ id_Y)) (id ⊗ a^{-1}) a (phi^r ⊗ id).
      {
        Matrix phi = detail::reversal(C, X, Y, nullptr);
        Matrix m = tensor_id(tmp, phi, dXY, YdXd, XY);
        m = assoc(tmp, Yd, Xd, XY) * m;
        m = id_tensor(tmp, Yd, assoc_inv(tmp, Xd, X, Y), tensor(tmp, Xd, XY), tensor(tmp, tensor(tmp, Xd, X), Y)) * m;
        Matrix evx_id = tensor_id(tmp, ev_mor(tmp, X), tensor(tmp, Xd, X), tmp.unit_obj(), Y);
        m = id_tensor(tmp, Yd, evx_id, tensor(tmp, tensor(tmp, Xd, X), Y), Y) * m;
        m = ev_mor(tmp, Y) * m;
        Layout L = product_layout(C.fusion, dXY, XY);
        for (size_t k = 0; k < XY.size(); ++k) {
          long pos = L.pos(C.fusion, dXY, XY, k, k, C.unit);
          FieldElement K = m(0, pos);
          if (K.is_zero()) throw Error(ErrorKind::InconsistentRigidity, "degenerate phi^r at " + C.tuple({x, y}));
          D.phi_r[(x * n + y) * n + XY[k]] = D.ev[XY[k]] / K;
        }
      }
      // Left duals: ev_X (id ⊗ (ev_Y ⊗ id)) (id ⊗ a^{-1}) a (id ⊗ phi^l).
      {
        Matrix phi = detail::reversal(C, X, Y, nullptr);
        Matrix m = id_tensor(tmp, XY, phi, dXY, YdXd);
        m = assoc(tmp, X, Y, YdXd) * m;
        m = id_tensor(tmp, X, assoc_inv(tmp, Y, Yd, Xd), tensor(tmp, Y, YdXd), tensor(tmp, tensor(tmp, Y, Yd), Xd)) * m;
        Matrix evy_id = tensor_id(tmp, left_ev_mor(tmp, Y), tensor(tmp, Y, Yd), tmp.unit_obj(), Xd);
        m = id_tensor(tmp, X, evy_id, tensor(tmp, tensor(tmp, Y, Yd), Xd), Xd) * m;
        m = left_ev_mor(tmp, X) * m;
        Layout L = product_layout(C.fusion, XY, dXY);
        for (size_t k = 0; k < XY.size(); ++k) {
          long pos = L.pos(C.fusion, XY, dXY, k, k, C.unit);
          FieldElement K = m(0, pos);
          if (K.is_zero()) throw Error(ErrorKind::InconsistentRigidity, "degenerate phi^l at " + C.tuple({x, y}));
          D.phi_l[(x * n + y) * n + XY[k]] = D.left_ev[XY[k]] / K;
        }
      }
    }
  return D;
}

namespace detail {

/// Largest real root of the field's minimal polynomial, if it has one.
inline std::optional<double> largest_real_root(const Field& k) {
  const auto& p = k.min_poly();
  auto eval = [&](double t) {
    double v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * t + p[i].get_d();
    return v;
  };
  double bound = 1;
  for (const auto& c : p) bound = std::max(bound, 1 + std::abs(c.get_d()));
  const int steps = 4096;
  for (int s = steps; s > -steps; --s) {
    double hi = bound * s / steps, lo = bound * (s - 1) / steps;
    if (eval(hi) == 0) return hi;
    if ((eval(lo) < 0) != (eval(hi) < 0)) {
      for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        ((eval(mid) < 0) == (eval(hi) < 0) ? hi : lo) = mid;
      }
      return (lo + hi) / 2;
    }
  }
  return std::nullopt;
}

inline double approx(const FieldElement& x, double root) {
  double v = 0;
  const auto& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;) v = v * root + c[i].get_d();
  return v;
}

inline std::optional<Rational> rational_sqrt(const FieldElement& x) {
  const auto& c = x.coeffs();
  for (size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) return std::nullopt;
  if (sgn(c[0]) < 0) return std::nullopt;
  mpz_class n = c[0].get_num(), d = c[0].get_den(), rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

/// d(x) = ±ev_x for self-dual x; |x|² = ev_x ev_{x*} otherwise. Signs make d positive under a real embedding.
inline std::vector<FieldElement> dimension_function(const FusionCategory& C, const DualityData& D) {
  const int n = C.rank();
  const FieldPtr& k = C.field;
  std::optional<double> root = largest_real_root(*k);
  auto positive = [&](FieldElement v) {
    if (root && approx(v, *root) < 0) v = -v;
    return v;
  };
  std::vector<FieldElement> d(n, k->zero());
  std::vector<int> open;
  for (int x = 0; x < n; ++x) {
    if (C.dual[x] == x) {
      d[x] = positive(D.ev[x]);
    } else if (auto r = rational_sqrt(D.ev[x] * D.ev[C.dual[x]])) {
      d[x] = k->from_rational(*r);
    } else {
      open.push_back(x);
    }
  }
  if (open.empty()) return d;
  // Remaining values from d(a) d(y) = Σ_z N_{ay}^z d(z) over the known a, with d(y) = d(y*) and d(1) = 1.
  Matrix A(k, 0, n);
  auto add_row = [&](Matrix row) { A = A.rows() == 0 ? row : A.vstack(row); };
  for (int a = 0; a < n; ++a) {
    if (std::find(open.begin(), open.end(), a) != open.end()) continue;
    for (int y = 0; y < n; ++y) {
      Matrix row(k, 1, n);
      row(0, y) = row(0, y) - d[a];
      for (int z : C.fusion.outputs(a, y)) row(0, z) = row(0, z) + k->one();
      add_row(row);
    }
  }
  for (int y : open) {
    Matrix row(k, 1, n);
    row(0, y) = k->one();
    row(0, C.dual[y]) = row(0, C.dual[y]) - k->one();
    add_row(row);
  }
  std::vector<Matrix> ns = nullspace(A);
  if (ns.size() != 1 || ns[0](C.unit, 0).is_zero()) return {};
  FieldElement scale = ns[0](C.unit, 0).inverse();
  for (int y : open) d[y] = positive(ns[0](y, 0) * scale);
  return d;
}

}  // namespace detail

inline void attach_duality(FusionCategory& C) {
  DualityData D = compute_duality(C);
  D.dim = detail::dimension_function(C, D);
  C.duality = std::move(D);
}

/// {c : N_{ab}^c = 1}
inline std::vector<int> tensor_decompose(const FusionCategory& C, int a, int b) {
  if (a < 0 || b < 0 || a >= C.rank() || b >= C.rank()) throw Error(ErrorKind::UnknownLabel, "label out of range");
  return C.fusion.outputs(a, b);
}

/// Schur: dim Hom(x, y) = sum_i x_i y_i for multiplicity vectors.
inline long hom_dim(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "multiplicity vectors of different length");
  long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += static_cast<long>(x[i]) * y[i];
  return s;
}

}  // namespace modend
