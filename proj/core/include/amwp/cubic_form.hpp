#ifndef AMWP_CUBIC_FORM_HPP
#define AMWP_CUBIC_FORM_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "amwp/linalg.hpp"
#include "amwp/mpoly.hpp"

namespace amwp {

/// Real cubic form in r variables, stored as the fully symmetric coefficient
/// tensor a_ijk, so that f(y) = sum over all ordered triples a_ijk y_i y_j y_k.
/// Intersection-number input fills a_ijk directly; monomial input divides the
/// printed coefficients by their multinomial counts.
class CubicForm {
 public:
  explicit CubicForm(int r);

  /// From monomial coefficients as printed (exponent vectors of degree 3).
  static CubicForm from_monomials(int r, const std::map<Exponents, BigRat>& mono);

  /// From intersection numbers a_ijk, indices 0-based and i <= j <= k.
  /// Throws on duplicate triples or out-of-range indices.
  static CubicForm from_intersection(
      int r, const std::vector<std::pair<std::array<int, 3>, BigRat>>& entries);

  int r() const { return r_; }

  /// Tensor entry, any index order.
  BigRat a(int i, int j, int k) const;
  void set_a(int i, int j, int k, const BigRat& v);

  /// f as a polynomial in y_1..y_r.
  MPoly polynomial() const;

  /// Third partials f_ijk = 6 a_ijk (constants).
  BigRat third_derivative(int i, int j, int k) const;

  /// f'(y') = f(A y'), i.e. substitute y = A y'.  Throws on singular A.
  CubicForm change_of_variables(const Mat<BigRat>& A) const;

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int r_;
  std::map<std::array<int, 3>, BigRat> coeffs_;  // sorted triples only
};

/// Hessian matrix of f (entries linear in y), its determinant H, and the
/// rescaled determinant h = det((1/6) Hess f) = H / 6^r.
struct HessianData {
  Mat<MPoly> hess;
  MPoly H;
  MPoly h;
};

HessianData hessian_data(const CubicForm& f);

/// Degree-4 Aronhold invariant of a ternary cubic, normalized so the STU
/// form takes the value 1 (see s_invariant_normalization).  Requires r = 3.
BigRat s_invariant(const CubicForm& f);

/// The unnormalized bracket contraction (abc)(abd)(acd)(bcd); exposed so the
/// frozen normalization constant stays regression-tested.
BigRat s_invariant_raw(const CubicForm& f);

/// The frozen constant c with s_invariant = s_invariant_raw / c.
const BigRat& s_invariant_normalization();

/// True iff f(y) > 0 and Hess f(y) has exactly one positive and r-1 negative
/// eigenvalues.  Degenerate Hessians report false (boundary points).
bool index_cone_contains(const CubicForm& f, const std::vector<BigRat>& y);

}  // namespace amwp

#endif  // AMWP_CUBIC_FORM_HPP
