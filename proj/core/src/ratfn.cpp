#include "amwp/ratfn.hpp"

#include <algorithm>

namespace amwp {

namespace {

// Divides out the largest common monomial factor of num and den.
void strip_common_monomial(MPoly& num, MPoly& den) {
  const int n = num.nvars();
  Exponents mn(n, 0), md(n, 0);
  bool first = true;
  for (const auto& [e, c] : num.terms()) {
    for (int v = 0; v < n; ++v) mn[v] = first ? e[v] : std::min(mn[v], e[v]);
    first = false;
  }
  first = true;
  for (const auto& [e, c] : den.terms()) {
    for (int v = 0; v < n; ++v) md[v] = first ? e[v] : std::min(md[v], e[v]);
    first = false;
  }
  Exponents common(n, 0);
  bool trivial = true;
  for (int v = 0; v < n; ++v) {
    common[v] = std::min(mn[v], md[v]);
    if (common[v]) trivial = false;
  }
  if (trivial) return;
  MPoly mono = MPoly::monomial(common, BigRat(1));
  num = *num.divide_exact(mono);
  den = *den.divide_exact(mono);
}

}  // namespace

RatFn RatFn::make(MPoly num, MPoly den) {
  if (num.nvars() != den.nvars())
    throw std::invalid_argument("RatFn: mixed variable counts");
  if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
  const int n = num.nvars();
  if (num.is_zero())
    return RatFn(MPoly(n), MPoly::constant(n, BigRat(1)));

  strip_common_monomial(num, den);
  if (!num.is_constant() && !den.is_constant()) {
    MPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  auto [cn, pn] = num.content_and_primitive();
  auto [cd, pd] = den.content_and_primitive();
  BigRat ratio = cn / cd;
  return RatFn(pn.scaled(BigRat(ratio.numerator())),
               pd.scaled(BigRat(ratio.denominator())));
}

RatFn RatFn::make_factored(MPoly num, const BigRat& scalar,
                           std::vector<std::pair<MPoly, unsigned>> factors) {
  if (scalar.is_zero()) throw std::domain_error("RatFn: zero denominator");
  const int n = num.nvars();
  if (num.is_zero())
    return RatFn(MPoly(n), MPoly::constant(n, BigRat(1)));
  MPoly den = MPoly::constant(n, scalar);
  for (auto& [f, e] : factors) {
    if (f.is_zero()) throw std::domain_error("RatFn: zero denominator factor");
    while (e > 0 && !num.is_constant()) {
      auto q = num.divide_exact(f);
      if (!q) break;
      num = std::move(*q);
      --e;
    }
    if (e > 0) den *= f.pow(e);
  }
  return make(std::move(num), std::move(den));
}

RatFn RatFn::from_poly(MPoly p) {
  const int n = p.nvars();
  return make(std::move(p), MPoly::constant(n, BigRat(1)));
}

RatFn RatFn::constant(int nvars, const BigRat& c) {
  return make(MPoly::constant(nvars, c), MPoly::constant(nvars, BigRat(1)));
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  // Cross-cancel first to keep the final gcd small.
  RatFn x = RatFn::make(a.num_, b.den_);
  RatFn y = RatFn::make(b.num_, a.den_);
  return RatFn::make(x.num_ * y.num_, x.den_ * y.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
  return a * RatFn::make(b.den_, b.num_);
}

RatFn RatFn::derivative(int v) const {
  MPoly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  return make_factored(std::move(n), BigRat(1), {{den_, 2}});
}

BigRat RatFn::evaluate(const std::vector<BigRat>& y) const {
  BigRat d = den_.evaluate(y);
  if (d.is_zero()) throw std::domain_error("RatFn: pole at evaluation point");
  return num_.evaluate(y) / d;
}

std::string RatFn::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) {
    BigRat d = den_.constant_term();
    if (d.is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/" + d.to_string();
  }
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace amwp
