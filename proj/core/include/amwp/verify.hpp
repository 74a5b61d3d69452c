#ifndef AMWP_VERIFY_HPP
#define AMWP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "amwp/cubic_form.hpp"
#include "amwp/linalg.hpp"

namespace amwp {

/// Deterministic generator (splitmix64) so every battery is reproducible
/// from its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  long int_in(long lo, long hi);  // inclusive
  /// Rational with numerator in [1, num_hi] and denominator in [1, den_hi].
  BigRat positive_rational(long num_hi, long den_hi);

 private:
  std::uint64_t state_;
};

/// Dense random ternary cubic with integer monomial coefficients in
/// [lo, hi], never identically zero.
CubicForm random_integer_cubic(Rng& rng, long lo = -9, long hi = 9);

/// Random nonzero complex direction with integer parts in [-3, 3].
std::vector<CRat> random_direction(Rng& rng, int r);

struct SuiteResult {
  std::string suite;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0 && passed > 0; }
};

// Verification batteries behind `verify --suite ...`; n = 0 means the
// suite's standard size.
SuiteResult suite_detg_factorization(std::uint64_t seed, int n);  // lemma3_5
SuiteResult suite_curvature_identity(std::uint64_t seed, int n);  // conj2_8 / lemma2_9
SuiteResult suite_type2_trace(std::uint64_t seed, int n);         // thm3_7
SuiteResult suite_slice_formula(std::uint64_t seed);              // slice_formula
SuiteResult suite_bounds(std::uint64_t seed, int n,
                         const std::string& catalog_name);        // bounds

/// Dispatch by suite name (lemma2_9, lemma3_5, thm3_7, conj2_8,
/// slice_formula, bounds, all).
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed,
                                    int n, const std::string& catalog_name);

}  // namespace amwp

#endif  // AMWP_VERIFY_HPP
