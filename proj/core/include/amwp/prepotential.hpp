#ifndef AMWP_PREPOTENTIAL_HPP
#define AMWP_PREPOTENTIAL_HPP

#include <complex>
#include <vector>

#include "amwp/curvature.hpp"
#include "amwp/cubic_form.hpp"
#include "amwp/metric.hpp"

namespace amwp {

using Cplx = std::complex<double>;

/// Holomorphic prepotential F = f/6 + sum a_lm t_l t_m + sum b_k t_k + c
/// + h(q) with q_j = exp(2 pi i t_j) and h a finite q-series vanishing at
/// the origin (all exponent vectors nonzero, |m|_1 <= 8).
struct Prepotential {
  CubicForm cubic;
  std::vector<std::vector<Cplx>> quadratic;  // r x r, symmetric
  std::vector<Cplx> linear;                  // length r
  Cplx constant{0.0, 0.0};

  struct TailTerm {
    std::vector<int> m;  // exponent vector, nonzero, entries >= 0
    Cplx c;
  };
  std::vector<TailTerm> tail;

  explicit Prepotential(const CubicForm& f);
  int r() const { return cubic.r(); }
  void validate() const;  // symmetry + tail constraints
};

/// The real argument of the Kaehler-potential logarithm,
///   i ( sum_j (t_j - tbar_j)(d_j F + conj(d_j F)) + 2 conj(F) - 2 F ),
/// evaluated directly from F and its t-derivatives.
double log_argument(const Prepotential& P, const std::vector<Cplx>& t);

/// K(t) = -log of the argument above; domain error when the argument is
/// not positive.
double kahler_potential(const Prepotential& P, const std::vector<Cplx>& t);

/// Independent reduced evaluation: 8 f(y)/6 plus the explicit quadratic,
/// linear, constant and q-series contributions, computed without touching
/// the t-derivatives of F.  Agrees with kahler_potential to roundoff.
double kahler_potential_reduced(const Prepotential& P, const std::vector<Cplx>& t);

/// Numeric metric g_ij = d^2 K / dt_i dtbar_j by Richardson-extrapolated
/// central differences (base step 1e-3, two levels); result is Hermitian-
/// symmetrized, and the pre-symmetrization residual is reported if asked.
std::vector<std::vector<Cplx>> metric_numeric(const Prepotential& P,
                                              const std::vector<Cplx>& t,
                                              double* hermitian_residual = nullptr);

/// Smallest eigenvalue of the Hermitian numeric metric (Jacobi sweeps on the
/// real embedding); positive-definiteness check near large radius.
double metric_numeric_min_eigenvalue(const Prepotential& P,
                                     const std::vector<Cplx>& t);

/// max_n || g(t + n) - g(t) ||_max over the given integer x-shifts.
double periodicity_deviation(const Prepotential& P, const std::vector<Cplx>& t,
                             const std::vector<std::vector<long>>& shifts);

/// Largest |entry| of the numeric metric at t + shift (decay diagnostics for
/// non-periodic prepotentials).
double metric_entry_norm_at_shift(const Prepotential& P,
                                  const std::vector<Cplx>& t,
                                  const std::vector<long>& shift);

struct AsymptoticRow {
  double s = 0;
  double metric_deviation = 0;     // max entry |g_numeric - g_amwp|
  double curvature_deviation = 0;  // max entry |R_numeric - R_amwp|
};

/// Along t = x0 + i s y0: deviations of the numeric metric and its numeric
/// curvature from the exact AMWP values at y = s y0.  The ray and scales are
/// rational so the exact side is evaluated at exactly the sampled points.
std::vector<AsymptoticRow> asymptotic_deviation(const Prepotential& P,
                                                const std::vector<double>& x0,
                                                const std::vector<BigRat>& y0,
                                                const std::vector<BigRat>& scales);

}  // namespace amwp

#endif  // AMWP_PREPOTENTIAL_HPP
