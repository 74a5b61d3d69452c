#ifndef AMWP_MPOLY_HPP
#define AMWP_MPOLY_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "amwp/rational.hpp"

namespace amwp {

/// Exponent vector of a monomial; length equals the ambient number of
/// variables.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded-lexicographic order, highest first: compare total degree, then
/// lexicographically with variable 0 most significant.  This is the one term
/// order used everywhere (canonical signs, leading terms, printing).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on equal degrees
  }
};

/// Sparse multivariate polynomial over BigRat.  Terms are kept in a map
/// ordered by descending graded-lex; zero coefficients are never stored.
/// Immutable in spirit: all operations return new values.
class MPoly {
 public:
  using TermMap = std::map<Exponents, BigRat, GrlexGreater>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly zero(int nvars) { return MPoly(nvars); }
  static MPoly constant(int nvars, const BigRat& c);
  static MPoly variable(int nvars, int i);  // 0-based variable index
  static MPoly monomial(Exponents e, const BigRat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero if absent).
  BigRat constant_term() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  unsigned degree() const;          // total degree; 0 for the zero polynomial
  unsigned degree_in(int v) const;  // max exponent of variable v

  const Exponents& leading_exponents() const;
  const BigRat& leading_coeff() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
  MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  friend MPoly operator*(const BigRat& c, const MPoly& p) { return p.scaled(c); }
  MPoly scaled(const BigRat& c) const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable v (0-based).
  MPoly derivative(int v) const;

  /// Exact evaluation at a rational point.
  BigRat evaluate(const std::vector<BigRat>& y) const;

  /// Evaluation over any ring T constructible from double (float paths).
  template <class T>
  T evaluate_as(const std::vector<T>& y) const {
    if (static_cast<int>(y.size()) != nvars_)
      throw std::invalid_argument("MPoly::evaluate_as: wrong point dimension");
    T acc = T(0);
    for (const auto& [e, c] : terms_) {
      T t = T(c.to_double());
      for (int v = 0; v < nvars_; ++v)
        for (unsigned k = 0; k < e[v]; ++k) t = t * y[v];
      acc = acc + t;
    }
    return acc;
  }

  /// Substitutes images[v] for variable v.  All images must share one
  /// ambient ring, which becomes the ring of the result.
  MPoly substitute(const std::vector<MPoly>& images) const;

  /// Re-embeds into a ring with more variables (new variables unused).
  MPoly extend_vars(int new_nvars) const;

  /// Exact quotient this/divisor, or nullopt when the division leaves a
  /// remainder.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  /// Writes p as content * primitive where primitive has coprime integer
  /// coefficients and positive leading coefficient; content is rational.
  /// Zero polynomial: {0, 0}.
  std::pair<BigRat, MPoly> content_and_primitive() const;

  /// Canonical text form: descending graded-lex terms, explicit signs,
  /// rational coefficients as p/q.  names may be empty (defaults y1..yn).
  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Internal: inserts c into the term at e (summing), dropping zeros.
  void add_term(const Exponents& e, const BigRat& c);

 private:
  int nvars_;
  TermMap terms_;
};

/// Polynomial gcd, canonical form: integer-primitive with positive leading
/// coefficient; gcd(0, q) is the canonical form of q.  Content/primitive
/// recursion with a subresultant remainder sequence.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

}  // namespace amwp

#endif  // AMWP_MPOLY_HPP
