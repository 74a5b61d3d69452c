#include "amwp/linalg.hpp"

namespace amwp {

BigRat det(const Mat<BigRat>& m) {
  Mat<BigRat> a = m;
  const int n = static_cast<int>(a.size());
  BigRat d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return BigRat(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    BigRat inv = a[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      BigRat factor = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return d;
}

Mat<BigRat> inverse(Mat<BigRat> a) {
  const int n = static_cast<int>(a.size());
  Mat<BigRat> inv = make_mat<BigRat>(n, BigRat(0));
  for (int i = 0; i < n; ++i) inv[i][i] = BigRat(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("inverse: singular matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
    }
    BigRat pinv = a[col][col].inverse();
    for (int c = 0; c < n; ++c) {
      a[col][c] *= pinv;
      inv[col][c] *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      BigRat factor = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<BigRat> solve(Mat<BigRat> m, std::vector<BigRat> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("solve: singular matrix");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
    }
    BigRat pinv = m[col][col].inverse();
    for (int c = col; c < n; ++c) m[col][c] *= pinv;
    rhs[col] *= pinv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      BigRat factor = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

std::vector<BigRat> char_poly(const Mat<BigRat>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<BigRat> coeff(n + 1, BigRat(0));
  coeff[0] = BigRat(1);
  Mat<BigRat> mk = make_mat<BigRat>(n, BigRat(0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = M * (M_{k-1} + c_{k-1} I)
    Mat<BigRat> tmp = mk;
    for (int i = 0; i < n; ++i) tmp[i][i] += coeff[k - 1];
    Mat<BigRat> next = make_mat<BigRat>(n, BigRat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) next[i][j] += m[i][l] * tmp[l][j];
    BigRat tr(0);
    for (int i = 0; i < n; ++i) tr += next[i][i];
    coeff[k] = -(tr / BigRat(k));
    mk = std::move(next);
  }
  return coeff;
}

Signature symmetric_signature(const Mat<BigRat>& m) {
  std::vector<BigRat> p = char_poly(m);
  const int n = static_cast<int>(m.size());
  Signature sig;
  int lowest_nonzero = 0;
  for (int k = n; k >= 0; --k) {
    if (!p[k].is_zero()) {
      lowest_nonzero = k;
      break;
    }
  }
  sig.zero = n - lowest_nonzero;
  // Descartes on p(x): exact root count because all roots are real.
  auto variations = [&](bool negate_odd) {
    int var = 0, prev = 0;
    for (int k = 0; k <= n; ++k) {
      int s = p[k].sign();
      if (negate_odd && ((n - k) % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  };
  sig.positive = variations(false);
  sig.negative = variations(true);
  return sig;
}

bool positive_definite(const Mat<BigRat>& m) {
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= n; ++k) {
    Mat<BigRat> lead(k, std::vector<BigRat>(k, BigRat(0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead[i][j] = m[i][j];
    if (det(lead).sign() <= 0) return false;
  }
  return true;
}

}  // namespace amwp
