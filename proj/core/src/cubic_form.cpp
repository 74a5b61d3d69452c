#include "amwp/cubic_form.hpp"

#include <algorithm>

namespace amwp {

namespace {

std::array<int, 3> sorted(int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

// Number of distinct orderings of the triple.
long multiplicity(const std::array<int, 3>& t) {
  if (t[0] == t[1] && t[1] == t[2]) return 1;
  if (t[0] == t[1] || t[1] == t[2]) return 3;
  return 6;
}

}  // namespace

CubicForm::CubicForm(int r) : r_(r) {
  if (r < 1) throw std::invalid_argument("CubicForm: need r >= 1");
}

CubicForm CubicForm::from_monomials(int r,
                                    const std::map<Exponents, BigRat>& mono) {
  CubicForm f(r);
  for (const auto& [e, c] : mono) {
    if (static_cast<int>(e.size()) != r)
      throw std::invalid_argument("CubicForm: exponent vector of wrong length");
    if (total_degree(e) != 3)
      throw std::invalid_argument("CubicForm: non-cubic monomial present");
    std::array<int, 3> t{};
    int pos = 0;
    for (int v = 0; v < r; ++v)
      for (unsigned k = 0; k < e[v]; ++k) t[pos++] = v;
    f.set_a(t[0], t[1], t[2],
            f.a(t[0], t[1], t[2]) + c / BigRat(multiplicity(t)));
  }
  return f;
}

CubicForm CubicForm::from_intersection(
    int r, const std::vector<std::pair<std::array<int, 3>, BigRat>>& entries) {
  CubicForm f(r);
  for (const auto& [t, v] : entries) {
    for (int idx : t)
      if (idx < 0 || idx >= r)
        throw std::out_of_range("CubicForm: index out of range");
    auto key = sorted(t[0], t[1], t[2]);
    if (f.coeffs_.count(key))
      throw std::invalid_argument("CubicForm: duplicate intersection triple");
    if (!v.is_zero()) f.coeffs_.emplace(key, v);
  }
  return f;
}

BigRat CubicForm::a(int i, int j, int k) const {
  auto it = coeffs_.find(sorted(i, j, k));
  return it == coeffs_.end() ? BigRat(0) : it->second;
}

void CubicForm::set_a(int i, int j, int k, const BigRat& v) {
  auto key = sorted(i, j, k);
  if (v.is_zero())
    coeffs_.erase(key);
  else
    coeffs_[key] = v;
}

MPoly CubicForm::polynomial() const {
  MPoly f(r_);
  for (const auto& [t, c] : coeffs_) {
    Exponents e(r_, 0);
    e[t[0]]++;
    e[t[1]]++;
    e[t[2]]++;
    f.add_term(e, c * BigRat(multiplicity(t)));
  }
  return f;
}

BigRat CubicForm::third_derivative(int i, int j, int k) const {
  return BigRat(6) * a(i, j, k);
}

CubicForm CubicForm::change_of_variables(const Mat<BigRat>& A) const {
  if (static_cast<int>(A.size()) != r_)
    throw std::invalid_argument("change_of_variables: matrix size mismatch");
  if (det(A).is_zero())
    throw std::domain_error("change_of_variables: singular matrix");
  CubicForm out(r_);
  for (int i = 0; i < r_; ++i) {
    for (int j = i; j < r_; ++j) {
      for (int k = j; k < r_; ++k) {
        BigRat acc(0);
        for (const auto& [t, c] : coeffs_) {
          // Sum A_pi A_qj A_rk over the distinct orderings (p,q,r) of t;
          // next_permutation from the sorted triple visits each exactly once.
          std::array<int, 3> p = t;
          BigRat orbit(0);
          do {
            orbit += A[p[0]][i] * A[p[1]][j] * A[p[2]][k];
          } while (std::next_permutation(p.begin(), p.end()));
          acc += c * orbit;
        }
        out.set_a(i, j, k, acc);
      }
    }
  }
  return out;
}

HessianData hessian_data(const CubicForm& f) {
  const int r = f.r();
  MPoly poly = f.polynomial();
  HessianData out;
  out.hess = make_mat<MPoly>(r, MPoly(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out.hess[i][j] = poly.derivative(i).derivative(j);
  out.H = det(out.hess);
  out.h = out.H.scaled(BigRat(1, 6).pow(static_cast<unsigned>(r)));
  return out;
}

BigRat s_invariant_raw(const CubicForm& f) {
  if (f.r() != 3)
    throw std::invalid_argument("s_invariant: only ternary cubics supported");
  // Bracket contraction (abc)(abd)(acd)(bcd) of four copies of the tensor.
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const std::array<int, 6> sign = {1, -1, -1, 1, 1, -1};
  BigRat acc(0);
  for (int p1 = 0; p1 < 6; ++p1)
    for (int p2 = 0; p2 < 6; ++p2)
      for (int p3 = 0; p3 < 6; ++p3)
        for (int p4 = 0; p4 < 6; ++p4) {
          const auto& s1 = perms[p1];
          const auto& s2 = perms[p2];
          const auto& s3 = perms[p3];
          const auto& s4 = perms[p4];
          BigRat term = f.a(s1[0], s2[0], s3[0]) * f.a(s1[1], s2[1], s4[0]) *
                        f.a(s1[2], s3[1], s4[1]) * f.a(s2[2], s3[2], s4[2]);
          if (term.is_zero()) continue;
          int sg = sign[p1] * sign[p2] * sign[p3] * sign[p4];
          acc += sg > 0 ? term : -term;
        }
  return acc;
}

const BigRat& s_invariant_normalization() {
  // Frozen so the STU intersection form has S = 1; the regression test
  // recomputes the raw contraction and checks this constant.
  static const BigRat c = BigRat(24);
  return c;
}

BigRat s_invariant(const CubicForm& f) {
  return s_invariant_raw(f) / s_invariant_normalization();
}

bool index_cone_contains(const CubicForm& f, const std::vector<BigRat>& y) {
  const int r = f.r();
  if (static_cast<int>(y.size()) != r)
    throw std::invalid_argument("index_cone_contains: wrong point dimension");
  MPoly poly = f.polynomial();
  if (poly.evaluate(y).sign() <= 0) return false;
  Mat<BigRat> hess = make_mat<BigRat>(r, BigRat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      hess[i][j] = poly.derivative(i).derivative(j).evaluate(y);
  Signature sig = symmetric_signature(hess);
  return sig.positive == 1 && sig.negative == r - 1 && sig.zero == 0;
}

}  // namespace amwp
