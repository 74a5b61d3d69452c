#ifndef AMWP_RATFN_HPP
#define AMWP_RATFN_HPP

#include <string>
#include <utility>
#include <vector>

#include "amwp/mpoly.hpp"

namespace amwp {

/// Reduced quotient of two multivariate polynomials.  Canonical form: both
/// parts have integer coefficients, their polynomial gcd is constant, the
/// integer contents of numerator and denominator are coprime, and the
/// denominator's graded-lex leading coefficient is positive.  Under this
/// normalization, equality of values coincides with structural equality.
class RatFn {
 public:
  RatFn() : num_(0), den_(MPoly::constant(0, BigRat(1))) {}

  /// Normalizing constructor; throws std::domain_error on zero denominator.
  static RatFn make(MPoly num, MPoly den);

  /// Same value as num / (scalar * prod factor^power), but strips the listed
  /// denominator factors from the numerator by exact division before the
  /// general gcd pass.  Intended for pipelines whose denominators are known
  /// products of f, H, det G and friends.
  static RatFn make_factored(MPoly num, const BigRat& scalar,
                             std::vector<std::pair<MPoly, unsigned>> factors);

  static RatFn from_poly(MPoly p);
  static RatFn constant(int nvars, const BigRat& c);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
  RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
  RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  /// Partial derivative in variable v.
  RatFn derivative(int v) const;

  /// Exact value; throws std::domain_error at poles of the reduced form.
  BigRat evaluate(const std::vector<BigRat>& y) const;

  template <class T>
  T evaluate_as(const std::vector<T>& y) const {
    return num_.evaluate_as(y) / den_.evaluate_as(y);
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  RatFn(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {}
  MPoly num_;
  MPoly den_;
};

}  // namespace amwp

#endif  // AMWP_RATFN_HPP
