#ifndef AMWP_RATIONAL_HPP
#define AMWP_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace amwp {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.  Thin value wrapper over GMP's mpq_class; all
/// operations are pure, so values are safe to share across threads.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}
  BigRat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("BigRat: zero denominator");
    v_.canonicalize();
  }
  explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit BigRat(const mpz_class& z) : v_(z) {}

  /// Parses "p", "-p" or "p/q".
  static BigRat from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("BigRat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("BigRat: zero denominator");
    q.canonicalize();
    return BigRat(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat abs() const { return sign() < 0 ? -*this : *this; }

  friend BigRat operator+(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ + b.v_)); }
  friend BigRat operator-(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ - b.v_)); }
  friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ * b.v_)); }
  friend BigRat operator/(const BigRat& a, const BigRat& b) {
    if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(mpq_class(a.v_ / b.v_));
  }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) { *this = *this / o; return *this; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat pow(unsigned e) const {
    mpq_class r(1);
    mpq_class base = v_;
    unsigned k = e;
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return BigRat(r);
  }

  /// 1/x; throws on zero.
  BigRat inverse() const {
    if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
    return BigRat(mpq_class(1 / v_));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  /// Floor/ceil as arbitrary-precision integers (used by lattice scans).
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline BigRat gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return BigRat(g);
}

inline std::ostream& operator<<(std::ostream& os, const BigRat& r) {
  return os << r.to_string();
}

}  // namespace amwp

#endif  // AMWP_RATIONAL_HPP
