/**
 * @file skeletal.hpp
 * @brief Objects as ordered lists of simples and the product layouts between them.
 *
 * In a skeletal semisimple category an object is stored as an ordered list of
 * simple labels (its summands with chosen inclusions). A morphism A -> B is a
 * |B| x |A| matrix whose (r, c) entry may be nonzero only when the labels of
 * summand r of B and summand c of A agree (Schur's lemma).
 *
 * A Pairing describes a multiplicity-free bilinear product of simples: the
 * fusion product of a category, the left action on a module category, or a
 * right action. The product of two list objects A and B is the list of all
 * paths (alpha, beta, c) with c in a_alpha * b_beta, ordered lexicographically
 * by alpha, then beta, then c ascending. Every structure map of the library
 * is expressed as a matrix between such path bases.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/matrix.hpp"

namespace modend {

/// An object of a skeletal semisimple category: its simple summands in order.
using Obj = std::vector<int>;

/// Multiplicity-free product table: outputs(a, b) is the ascending list of c with N_{ab}^c = 1.
class Pairing {
 public:
  Pairing() = default;
  Pairing(int n_left, int n_right, int n_out)
      : nl_(n_left), nr_(n_right), no_(n_out),
        lists_(static_cast<size_t>(n_left) * n_right),
        index_(static_cast<size_t>(n_left) * n_right * n_out, -1) {}

  int n_left() const { return nl_; }
  int n_right() const { return nr_; }
  int n_out() const { return no_; }

  /// Marks c as an output of (a, b); outputs are kept sorted.
  void set(int a, int b, int c) {
    auto& l = lists_[slot(a, b)];
    for (int x : l)
      if (x == c) return;
    l.push_back(c);
    std::sort(l.begin(), l.end());
    for (size_t k = 0; k < l.size(); ++k) index_[slot(a, b) * no_ + l[k]] = static_cast<int>(k);
  }

  const std::vector<int>& outputs(int a, int b) const { return lists_[slot(a, b)]; }

  bool has(int a, int b, int c) const { return index_[slot(a, b) * no_ + c] >= 0; }

  /// Position of c inside outputs(a, b), or -1.
  int index(int a, int b, int c) const { return index_[slot(a, b) * no_ + c]; }

 private:
  size_t slot(int a, int b) const { return static_cast<size_t>(a) * nr_ + b; }
  int nl_ = 0, nr_ = 0, no_ = 0;
  std::vector<std::vector<int>> lists_;
  std::vector<int> index_;
};

/// The path basis of the product of two list objects.
struct Layout {
  Obj obj;                     ///< resulting list of output labels
  std::vector<size_t> offset;  ///< offset[alpha * nB + beta] = first position of that pair
  size_t nB = 0;

  /// Position of the path (alpha, beta, c); -1 if c is not an output.
  long pos(const Pairing& p, const Obj& A, const Obj& B, size_t alpha, size_t beta, int c) const {
    int k = p.index(A[alpha], B[beta], c);
    if (k < 0) return -1;
    return static_cast<long>(offset[alpha * nB + beta] + k);
  }
};

inline Layout product_layout(const Pairing& p, const Obj& A, const Obj& B) {
  Layout L;
  L.nB = B.size();
  L.offset.resize(A.size() * B.size());
  for (size_t a = 0; a < A.size(); ++a)
    for (size_t b = 0; b < B.size(); ++b) {
      L.offset[a * B.size() + b] = L.obj.size();
      for (int c : p.outputs(A[a], B[b])) L.obj.push_back(c);
    }
  return L;
}

inline Obj product(const Pairing& p, const Obj& A, const Obj& B) { return product_layout(p, A, B).obj; }

/// f (A -> A2) times g (B -> B2) on path bases: entry f[a2,a] * g[b2,b] on matching c.
inline Matrix product_mor(const Pairing& p, const Matrix& f, const Obj& A, const Obj& A2, const Matrix& g,
                          const Obj& B, const Obj& B2) {
  if (f.rows() != A2.size() || f.cols() != A.size() || g.rows() != B2.size() || g.cols() != B.size())
    throw Error(ErrorKind::DimensionMismatch, "product of morphisms with inconsistent shapes");
  Layout src = product_layout(p, A, B);
  Layout dst = product_layout(p, A2, B2);
  Matrix out(f.field(), dst.obj.size(), src.obj.size());
  for (size_t a2 = 0; a2 < A2.size(); ++a2)
    for (size_t a = 0; a < A.size(); ++a) {
      const FieldElement& x = f(a2, a);
      if (x.is_zero()) continue;
      for (size_t b2 = 0; b2 < B2.size(); ++b2)
        for (size_t b = 0; b < B.size(); ++b) {
          const FieldElement& y = g(b2, b);
          if (y.is_zero()) continue;
          FieldElement xy = x * y;
          for (int c : p.outputs(A[a], B[b])) {
            long r = dst.pos(p, A2, B2, a2, b2, c);
            long s = src.pos(p, A, B, a, b, c);
            if (r >= 0) out(r, s) = xy;
          }
        }
    }
  return out;
}

inline Matrix identity_on(const FieldPtr& f, const Obj& A) { return Matrix::identity(f, A.size()); }

/// Concatenation A + B (direct sum with A's summands first).
inline Obj concat(const Obj& A, const Obj& B) {
  Obj out(A);
  out.insert(out.end(), B.begin(), B.end());
  return out;
}

/// Multiplicity vector of a list object over n simples.
inline std::vector<int> multiplicities(const Obj& A, int n) {
  std::vector<int> v(n, 0);
  for (int a : A) ++v[a];
  return v;
}

/// Positions of A whose label equals x.
inline std::vector<size_t> positions_of(const Obj& A, int x) {
  std::vector<size_t> out;
  for (size_t i = 0; i < A.size(); ++i)
    if (A[i] == x) out.push_back(i);
  return out;
}

/// Basis of Hom(A, B) as (row, col) positions with matching labels, ordered row-major.
inline std::vector<std::pair<size_t, size_t>> hom_basis(const Obj& A, const Obj& B) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t r = 0; r < B.size(); ++r)
    for (size_t c = 0; c < A.size(); ++c)
      if (B[r] == A[c]) out.emplace_back(r, c);
  return out;
}

/// Checks that a matrix only has entries between summands of equal label.
inline bool respects_labels(const Matrix& m, const Obj& src, const Obj& dst) {
  if (m.rows() != dst.size() || m.cols() != src.size()) return false;
  for (size_t r = 0; r < dst.size(); ++r)
    for (size_t c = 0; c < src.size(); ++c)
      if (dst[r] != src[c] && !m(r, c).is_zero()) return false;
  return true;
}

}  // namespace modend
