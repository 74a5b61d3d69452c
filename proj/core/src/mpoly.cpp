#include "amwp/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace amwp {

MPoly MPoly::constant(int nvars, const BigRat& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars)
    throw std::out_of_range("MPoly::variable: index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  MPoly p(nvars);
  p.terms_.emplace(std::move(e), BigRat(1));
  return p;
}

MPoly MPoly::monomial(Exponents e, const BigRat& c) {
  MPoly p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

BigRat MPoly::constant_term() const {
  Exponents e(nvars_, 0);
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRat(0) : it->second;
}

unsigned MPoly::degree() const {
  return terms_.empty() ? 0u : total_degree(terms_.begin()->first);
}

unsigned MPoly::degree_in(int v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("MPoly: zero has no leading term");
  return terms_.begin()->first;
}

const BigRat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("MPoly: zero has no leading term");
  return terms_.begin()->second;
}

void MPoly::add_term(const Exponents& e, const BigRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("MPoly: mixed variable counts");
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("MPoly: mixed variable counts");
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("MPoly: mixed variable counts");
  MPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const BigRat& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(nvars_, BigRat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) r *= base;
    if (e >>= 1u) base *= base;
  }
  return r;
}

MPoly MPoly::derivative(int v) const {
  if (v < 0 || v >= nvars_)
    throw std::out_of_range("MPoly::derivative: variable index out of range");
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    r.add_term(d, c * BigRat(static_cast<long>(e[v])));
  }
  return r;
}

BigRat MPoly::evaluate(const std::vector<BigRat>& y) const {
  if (static_cast<int>(y.size()) != nvars_)
    throw std::invalid_argument("MPoly::evaluate: wrong point dimension");
  // Memoize per-variable powers.
  std::vector<std::vector<BigRat>> pows(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    unsigned d = degree_in(v);
    pows[v].reserve(d + 1);
    pows[v].push_back(BigRat(1));
    for (unsigned k = 1; k <= d; ++k) pows[v].push_back(pows[v].back() * y[v]);
  }
  BigRat acc(0);
  for (const auto& [e, c] : terms_) {
    BigRat t = c;
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) t *= pows[v][e[v]];
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("MPoly::substitute: wrong image count");
  int target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target)
      throw std::invalid_argument("MPoly::substitute: images in mixed rings");
  std::vector<std::vector<MPoly>> pows(nvars_);
  for (int v = 0; v < nvars_; ++v)
    pows[v].push_back(MPoly::constant(target, BigRat(1)));
  MPoly acc(target);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(target, c);
    for (int v = 0; v < nvars_; ++v) {
      while (pows[v].size() <= e[v])
        pows[v].push_back(pows[v].back() * images[v]);
      if (e[v]) t *= pows[v][e[v]];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::extend_vars(int new_nvars) const {
  if (new_nvars < nvars_)
    throw std::invalid_argument("MPoly::extend_vars: cannot shrink ring");
  MPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ext(new_nvars, 0);
    std::copy(e.begin(), e.end(), ext.begin());
    r.terms_.emplace(std::move(ext), c);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.nvars_ != nvars_)
    throw std::invalid_argument("MPoly: mixed variable counts");
  if (divisor.is_zero()) throw std::domain_error("MPoly: division by zero");
  MPoly q(nvars_);
  MPoly rem = *this;
  const Exponents& dl = divisor.leading_exponents();
  const BigRat& dc = divisor.leading_coeff();
  Exponents t(nvars_);
  while (!rem.is_zero()) {
    const Exponents& rl = rem.leading_exponents();
    for (int v = 0; v < nvars_; ++v) {
      if (rl[v] < dl[v]) return std::nullopt;
      t[v] = rl[v] - dl[v];
    }
    BigRat c = rem.leading_coeff() / dc;
    MPoly mono = MPoly::monomial(t, c);
    q += mono;
    rem -= mono * divisor;
  }
  return q;
}

std::pair<BigRat, MPoly> MPoly::content_and_primitive() const {
  if (is_zero()) return {BigRat(0), MPoly(nvars_)};
  // lcm of denominators, then gcd of numerators.
  mpz_class den_lcm(1);
  for (const auto& [e, c] : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.denominator().get_mpz_t());
  mpz_class num_gcd(0);
  for (const auto& [e, c] : terms_) {
    mpz_class scaled_num = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  BigRat content = BigRat(mpz_class(num_gcd)) / BigRat(den_lcm);
  if (leading_coeff().sign() < 0) content = -content;
  MPoly prim = scaled(content.inverse());
  return {content, prim};
}

namespace {

// Univariate view in variable v: coefficients (polys without v) by v-degree.
std::vector<MPoly> coeffs_in(const MPoly& p, int v) {
  std::vector<MPoly> out(p.degree_in(v) + 1, MPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents base = e;
    unsigned k = base[v];
    base[v] = 0;
    out[k].add_term(base, c);
  }
  return out;
}

MPoly from_coeffs(const std::vector<MPoly>& cs, int v, int nvars) {
  MPoly r(nvars);
  for (unsigned k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms()) {
      Exponents ext = e;
      ext[v] += k;
      r.add_term(ext, c);
    }
  }
  return r;
}

unsigned deg_in(const std::vector<MPoly>& cs) {
  for (std::size_t k = cs.size(); k-- > 0;)
    if (!cs[k].is_zero()) return static_cast<unsigned>(k);
  return 0;
}

bool univ_zero(const std::vector<MPoly>& cs) {
  for (const auto& c : cs)
    if (!c.is_zero()) return false;
  return true;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(deg a - deg b + 1) * a
// reduced mod b.  Inputs as coefficient vectors; b nonzero, deg a >= deg b.
std::vector<MPoly> pseudo_rem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  const unsigned n = deg_in(b);
  const MPoly& lb = b[n];
  const int nv = lb.nvars();
  long e = static_cast<long>(deg_in(a)) - static_cast<long>(n) + 1;
  while (!univ_zero(a)) {
    unsigned m = deg_in(a);
    if (m < n) break;
    MPoly lr = a[m];
    for (auto& c : a)
      if (!c.is_zero()) c *= lb;
    for (unsigned k = 0; k <= n; ++k)
      if (!b[k].is_zero()) a[k + m - n] -= lr * b[k];
    a[m] = MPoly(nv);  // exact cancellation by construction
    --e;
  }
  if (e > 0) {
    MPoly mult = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a)
      if (!c.is_zero()) c *= mult;
  }
  return a;
}

MPoly divide_all(const std::vector<MPoly>& cs, const MPoly& d, int v, int nvars) {
  std::vector<MPoly> out(cs.size(), MPoly(nvars));
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    auto q = cs[k].divide_exact(d);
    if (!q) throw std::logic_error("poly_gcd: inexact subresultant division");
    out[k] = *q;
  }
  return from_coeffs(out, v, nvars);
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("poly_gcd: mixed variable counts");
  const int n = a.nvars();
  if (a.is_zero()) return b.is_zero() ? MPoly(n) : b.content_and_primitive().second;
  if (b.is_zero()) return a.content_and_primitive().second;

  // Main variable: first with positive degree in either operand.
  int v = -1;
  for (int k = 0; k < n; ++k) {
    if (a.degree_in(k) > 0 || b.degree_in(k) > 0) {
      v = k;
      break;
    }
  }
  if (v < 0) return MPoly::constant(n, BigRat(1));  // both constants

  auto ca = coeffs_in(a, v);
  auto cb = coeffs_in(b, v);

  // Content of p with respect to v (gcd of its v-coefficients).
  auto content_v = [&](const std::vector<MPoly>& cs) {
    MPoly g(n);
    for (const auto& c : cs)
      if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
  };

  if (a.degree_in(v) == 0) return poly_gcd(a, content_v(cb));
  if (b.degree_in(v) == 0) return poly_gcd(content_v(ca), b);

  MPoly cont_a = content_v(ca);
  MPoly cont_b = content_v(cb);
  MPoly pa = divide_all(ca, cont_a, v, n);
  MPoly pb = divide_all(cb, cont_b, v, n);
  MPoly c = poly_gcd(cont_a, cont_b);

  std::vector<MPoly> u = coeffs_in(pa, v);
  std::vector<MPoly> w = coeffs_in(pb, v);
  if (deg_in(u) < deg_in(w)) std::swap(u, w);

  MPoly g = MPoly::constant(n, BigRat(1));
  MPoly h = MPoly::constant(n, BigRat(1));
  MPoly result(n);
  while (true) {
    unsigned du = deg_in(u), dw = deg_in(w);
    unsigned d = du - dw;
    std::vector<MPoly> r = pseudo_rem(u, w);
    if (univ_zero(r)) {
      result = from_coeffs(w, v, n);
      break;
    }
    if (deg_in(r) == 0) {
      // Nonzero constant (in v) remainder: primitive parts are coprime in v.
      result = MPoly::constant(n, BigRat(1));
      break;
    }
    u = std::move(w);
    // w = r / (g * h^d)
    MPoly divisor = g * h.pow(d);
    std::vector<MPoly> wnext(r.size(), MPoly(n));
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].is_zero()) continue;
      auto q = r[k].divide_exact(divisor);
      if (!q) throw std::logic_error("poly_gcd: inexact subresultant step");
      wnext[k] = *q;
    }
    w = std::move(wnext);
    g = u[deg_in(u)];
    if (d > 0) {
      MPoly gd = g.pow(d);
      auto q = d == 1 ? gd : *gd.divide_exact(h.pow(d - 1));
      h = q;
    }
  }

  // Strip the v-content of the PRS tail, reattach the common content.
  if (!result.is_constant()) {
    MPoly rc = content_v(coeffs_in(result, v));
    result = *result.divide_exact(rc);
  }
  result = c * result;
  return result.content_and_primitive().second;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int v) {
    if (v < static_cast<int>(names.size())) return names[v];
    return "y" + std::to_string(v + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    if (!mag.is_one() || !has_vars) {
      os << mag.to_string();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(v);
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

}  // namespace amwp
