#include "amwp/verify.hpp"

#include <cmath>

#include "amwp/catalog.hpp"
#include "amwp/curvature.hpp"
#include "amwp/identities.hpp"
#include "amwp/metric.hpp"

namespace amwp {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::int_in(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

BigRat Rng::positive_rational(long num_hi, long den_hi) {
  return BigRat(int_in(1, num_hi), int_in(1, den_hi));
}

CubicForm random_integer_cubic(Rng& rng, long lo, long hi) {
  for (;;) {
    std::map<Exponents, BigRat> mono;
    for (unsigned e1 = 0; e1 <= 3; ++e1)
      for (unsigned e2 = 0; e1 + e2 <= 3; ++e2) {
        unsigned e3 = 3 - e1 - e2;
        long c = rng.int_in(lo, hi);
        if (c != 0) mono[{e1, e2, e3}] = BigRat(c);
      }
    if (!mono.empty()) return CubicForm::from_monomials(3, mono);
  }
}

std::vector<CRat> random_direction(Rng& rng, int r) {
  for (;;) {
    std::vector<CRat> v(r);
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      v[i] = CRat(BigRat(rng.int_in(-3, 3)), BigRat(rng.int_in(-3, 3)));
      nonzero = nonzero || !v[i].is_zero();
    }
    if (nonzero) return v;
  }
}

namespace {

void record(SuiteResult& res, bool ok, const std::string& what) {
  if (ok)
    ++res.passed;
  else {
    ++res.failed;
    res.failures.push_back(what);
  }
}

}  // namespace

SuiteResult suite_detg_factorization(std::uint64_t seed, int n) {
  if (n <= 0) n = 100;
  SuiteResult res;
  res.suite = "lemma3_5";
  ParametricCubic wf = catalog_get("weierstrass").family.value();
  record(res, det_g_factorization_holds(wf.f, wf.r),
         "symbolic Weierstrass family");
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    CubicForm f = random_integer_cubic(rng);
    record(res, det_g_factorization_holds(f),
           "random cubic #" + std::to_string(i));
  }
  return res;
}

SuiteResult suite_curvature_identity(std::uint64_t seed, int n) {
  if (n <= 0) n = 25;
  SuiteResult res;
  res.suite = "conj2_8";

  // r = 1 with a symbolic leading coefficient: f = c y^3 in Q[y, c].
  {
    MPoly f(2);
    f.add_term({3, 1}, BigRat(1));
    record(res, curvature_identity_holds(f, 1), "general r = 1 cubic");
  }
  // r = 2 with all four coefficients symbolic.
  {
    MPoly f(6);
    f.add_term({3, 0, 1, 0, 0, 0}, BigRat(1));
    f.add_term({2, 1, 0, 1, 0, 0}, BigRat(1));
    f.add_term({1, 2, 0, 0, 1, 0}, BigRat(1));
    f.add_term({0, 3, 0, 0, 0, 1}, BigRat(1));
    record(res, curvature_identity_holds(f, 2), "general r = 2 cubic");
  }
  // Symbolic Weierstrass family, r = 3.
  {
    ParametricCubic wf = catalog_get("weierstrass").family.value();
    record(res, curvature_identity_holds(wf.f, wf.r),
           "symbolic Weierstrass family");
  }
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    CubicForm f = random_integer_cubic(rng);
    record(res, curvature_identity_holds(f.polynomial(), 3),
           "random cubic #" + std::to_string(i));
  }
  return res;
}

SuiteResult suite_type2_trace(std::uint64_t seed, int n) {
  if (n <= 0) n = 20;
  SuiteResult res;
  res.suite = "thm3_7";
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    BigRat a(rng.int_in(-6, 6));
    BigRat b(rng.int_in(-6, 6));
    BigRat c(rng.int_in(-6, 6));
    if (b.is_zero() && c.is_zero()) c = BigRat(1);
    Type2TraceResult t = type2_trace_constant(a, b, c);
    record(res, t.ok && t.constant == type2_trace_expected(),
           "triple (" + a.to_string() + "," + b.to_string() + "," +
               c.to_string() + ")");
  }
  return res;
}

SuiteResult suite_slice_formula(std::uint64_t seed) {
  SuiteResult res;
  res.suite = "slice_formula";
  Rng rng(seed);
  for (const std::string& name : {"STU", "V16_11158", "V12_11136"}) {
    CubicForm f = catalog_get(name).cubic.value();
    int found = 0;
    while (found < 10) {
      std::vector<BigRat> y = {rng.positive_rational(8, 4),
                               rng.positive_rational(8, 4),
                               rng.positive_rational(8, 4)};
      if (!index_cone_contains(f, y)) continue;
      BigRat exact;
      try {
        exact = slice_curvature_formula(f, y);
      } catch (const std::domain_error&) {
        continue;
      }
      double numeric = slice_curvature_numeric(f, y);
      double err = std::fabs(exact.to_double() - numeric);
      record(res, err < 1e-4,
             name + " point #" + std::to_string(found) + " err=" +
                 std::to_string(err));
      ++found;
    }
  }
  // Type II family: S vanishes, so the formula value is exactly -9/4.
  for (int i = 0; i < 20; ++i) {
    BigRat a(rng.int_in(-6, 6)), b(rng.int_in(-6, 6)), c(rng.int_in(-6, 6));
    if (b.is_zero() && c.is_zero()) b = BigRat(2);
    record(res, s_invariant(type2_family(a, b, c)).is_zero(),
           "type II S = 0 at sample " + std::to_string(i));
  }
  {
    CubicForm f = type2_family(BigRat(-1), BigRat(0), BigRat(-1));
    std::vector<BigRat> y = {BigRat(3), BigRat(2), BigRat(1)};
    BigRat exact = slice_curvature_formula(f, y);
    record(res, exact == BigRat(-9, 4), "type II formula value");
    double numeric = slice_curvature_numeric(f, y);
    record(res, std::fabs(numeric + 2.25) < 1e-4, "type II numeric oracle");
  }
  return res;
}

SuiteResult suite_bounds(std::uint64_t seed, int n, const std::string& catalog_name) {
  if (n <= 0) n = 1000;
  SuiteResult res;
  res.suite = "bounds";
  std::string which = catalog_name.empty() ? "STU" : catalog_name;
  CubicForm f = catalog_get(which).cubic.value();
  MetricField m = amwp_metric(f);
  const BigRat hsc_bound(-2);
  const BigRat scalar_bound(-12);
  Rng rng(seed);
  int done = 0;
  while (done < n) {
    std::vector<BigRat> y = {rng.positive_rational(16, 4),
                             rng.positive_rational(16, 4),
                             rng.positive_rational(16, 4)};
    if (!index_cone_contains(f, y)) continue;
    CurvaturePointData c = curvature_at(m, y);
    std::vector<CRat> v = random_direction(rng, 3);
    BigRat h = hsc_from(c, v);
    BigRat s = scalar_from(c);
    record(res, h >= hsc_bound,
           "hsc at sample " + std::to_string(done) + " = " + h.to_string());
    record(res, s >= scalar_bound,
           "scalar at sample " + std::to_string(done) + " = " + s.to_string());
    ++done;
  }
  return res;
}

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed,
                                    int n, const std::string& catalog_name) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* s) { return name == s || name == "all"; };
  if (want("lemma3_5")) out.push_back(suite_detg_factorization(seed, n));
  if (want("conj2_8") || name == "lemma2_9")
    out.push_back(suite_curvature_identity(seed, n));
  if (want("thm3_7")) out.push_back(suite_type2_trace(seed, n));
  if (want("slice_formula")) out.push_back(suite_slice_formula(seed));
  if (want("bounds")) out.push_back(suite_bounds(seed, n, catalog_name));
  if (out.empty())
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
  return out;
}

}  // namespace amwp
