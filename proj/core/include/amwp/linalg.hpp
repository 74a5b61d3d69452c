#ifndef AMWP_LINALG_HPP
#define AMWP_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "amwp/mpoly.hpp"
#include "amwp/rational.hpp"

namespace amwp {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> make_mat(int n, const T& fill) {
  return Mat<T>(n, std::vector<T>(n, fill));
}

/// Determinant by cofactor expansion along the first row.  Fine for the
/// small symbolic matrices this project manipulates (n <= 5).
template <class T>
T det_cofactor(const Mat<T>& m, const T& zero, const T& one) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T acc = zero;
  for (int j = 0; j < n; ++j) {
    Mat<T> minor;
    minor.reserve(n - 1);
    for (int r = 1; r < n; ++r) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    T term = m[0][j] * det_cofactor(minor, zero, one);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline MPoly det(const Mat<MPoly>& m) {
  int nv = m.empty() ? 0 : m[0][0].nvars();
  return det_cofactor(m, MPoly(nv), MPoly::constant(nv, BigRat(1)));
}

BigRat det(const Mat<BigRat>& m);

/// Adjugate (transposed cofactor matrix): adj(M) * M = det(M) * I.
template <class T>
Mat<T> adjugate(const Mat<T>& m, const T& zero, const T& one) {
  const int n = static_cast<int>(m.size());
  Mat<T> adj = make_mat<T>(n, zero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mat<T> minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<T> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      T cof = det_cofactor(minor, zero, one);
      adj[j][i] = ((i + j) % 2 == 0) ? cof : zero - cof;
    }
  }
  return adj;
}

inline Mat<MPoly> adjugate(const Mat<MPoly>& m) {
  int nv = m.empty() ? 0 : m[0][0].nvars();
  return adjugate(m, MPoly(nv), MPoly::constant(nv, BigRat(1)));
}

inline Mat<BigRat> adjugate(const Mat<BigRat>& m) {
  return adjugate(m, BigRat(0), BigRat(1));
}

/// Exact inverse; throws std::domain_error on singular input.
Mat<BigRat> inverse(Mat<BigRat> m);

/// Solves M x = rhs exactly; throws std::domain_error on singular input.
std::vector<BigRat> solve(Mat<BigRat> m, std::vector<BigRat> rhs);

/// Coefficients [1, c1, ..., cn] of det(xI - M) = x^n + c1 x^(n-1) + ... + cn
/// (Faddeev-LeVerrier).
std::vector<BigRat> char_poly(const Mat<BigRat>& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia of a symmetric rational matrix: Descartes sign counting on
/// the characteristic polynomial (all roots real, so the count is exact).
Signature symmetric_signature(const Mat<BigRat>& m);

/// Sylvester test: all leading principal minors positive.
bool positive_definite(const Mat<BigRat>& m);

/// Exact complex rational (re + i*im); enough arithmetic for curvature
/// contractions with rational directions.
struct CRat {
  BigRat re, im;
  CRat() : re(0), im(0) {}
  CRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  explicit CRat(long r) : re(r), im(0) {}
  CRat conj() const { return CRat(re, -im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend CRat operator+(const CRat& a, const CRat& b) { return CRat(a.re + b.re, a.im + b.im); }
  friend CRat operator-(const CRat& a, const CRat& b) { return CRat(a.re - b.re, a.im - b.im); }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return CRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
};

}  // namespace amwp

#endif  // AMWP_LINALG_HPP
