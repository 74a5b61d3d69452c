#ifndef AMWP_METRIC_HPP
#define AMWP_METRIC_HPP

#include <vector>

#include "amwp/cubic_form.hpp"
#include "amwp/linalg.hpp"
#include "amwp/ratfn.hpp"

namespace amwp {

/// Polynomial building blocks of the metric: G_ij = f_i f_j - f f_ij,
/// B = Adj(G) and det G.  The cubic may live in a larger ring whose trailing
/// variables act as symbolic parameters; r counts the active variables.
struct GMatrix {
  int r = 0;
  Mat<MPoly> G;
  Mat<MPoly> B;
  MPoly detG;
};

GMatrix g_matrix(const MPoly& f, int r);
GMatrix g_matrix(const CubicForm& f);

/// The metric with potential -log f(y): 4 g_ij = -d^2 log f / dy_i dy_j.
/// Every entry is an exact rational function of y alone; the complex
/// coordinates t = x + iy never appear because the potential is
/// x-independent, which reduces each d/dt_k d/dtbar_l to (1/4) d^2/dy_k dy_l.
/// That reduction is applied once here and reused by the curvature pipeline.
struct MetricField {
  int r = 0;
  Mat<RatFn> g;
  RatFn detg;
  Mat<RatFn> ginv;
  MPoly f;      // the cubic as a polynomial
  GMatrix gm;   // retained for downstream exact pipelines
};

MetricField amwp_metric(const CubicForm& f);

/// Exact positive-definiteness (leading principal minors) of g at y.
/// Throws std::domain_error at poles.
bool metric_positive_at(const MetricField& m, const std::vector<BigRat>& y);

/// Gaussian curvature of the level-set metric (centro-affine metric scaled
/// by 1/6) at the radial projection of y onto {f = 1}, via the closed form
/// -9/4 + S f(y)^2 / (4 h(y)^2); the f^2/h^2 ratio is what makes the value
/// ray-invariant.  Requires r = 3, y in the index cone and h(y) != 0.
BigRat slice_curvature_formula(const CubicForm& f, const std::vector<BigRat>& y);

/// Independent numeric oracle for the same quantity: restrict -(1/6) Hess f
/// to {f = 1}, build a local chart by solving for one coordinate, and apply
/// the Brioschi formula with Richardson-extrapolated central differences.
double slice_curvature_numeric(const CubicForm& f, const std::vector<BigRat>& y0);

/// Numeric sectional curvature of the real Riemannian metric h_ij = g_ij on
/// the cone, for the plane spanned by spanA and spanB at y0 (Christoffel
/// symbols from finite differences of exact entry evaluations).
double sectional_curvature_numeric(const MetricField& m,
                                   const std::vector<BigRat>& y0,
                                   const std::vector<double>& spanA,
                                   const std::vector<double>& spanB);

/// Max |K| over planes spanned by the radial direction y0 and each
/// coordinate complement direction; the product structure of the cone metric
/// forces zero, so this measures discretization error only.
double radial_flatness_check(const CubicForm& f, const std::vector<BigRat>& y0);

}  // namespace amwp

#endif  // AMWP_METRIC_HPP
