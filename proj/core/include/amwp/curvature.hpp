#ifndef AMWP_CURVATURE_HPP
#define AMWP_CURVATURE_HPP

#include <vector>

#include "amwp/metric.hpp"

namespace amwp {

/// Kaehler curvature tensor of the metric with potential -log f, stored in
/// the orientation for which Ricci_kl = g^{ij} R_ijkl = -(1/4) d^2 log det g,
/// so hyperbolic-type metrics have negative holomorphic sectional curvature.
/// With this orientation the quadratic-vs-cubic curvature identity reads
///   R_ijkl = -g_ij g_kl - g_il g_kj + sum_pq g^pq f_ikp f_jlq / (64 f^2).
/// Symmetries: R_ijkl = R_kjil = R_ilkj; all entries are functions of y only.
struct CurvatureField {
  int r = 0;
  std::vector<RatFn> entries;  // r^4, index (((i*r+j)*r+k)*r+l)
  Mat<RatFn> ricci;
  RatFn scalar;
  int kappa = 0;  // frozen scalar normalization, see scalar_kappa()

  const RatFn& R(int i, int j, int k, int l) const {
    return entries[static_cast<std::size_t>(((i * r + j) * r + k) * r + l)];
  }
};

/// Full symbolic field; guarded to r <= 3 (entry sizes grow sharply beyond).
/// For larger r use curvature_at.
CurvatureField curvature_field(const MetricField& m);

/// Exact pointwise curvature data for any r.
struct CurvaturePointData {
  int r = 0;
  BigRat f_val;
  Mat<BigRat> g;
  Mat<BigRat> ginv;
  std::vector<BigRat> entries;  // r^4, same layout and orientation as above

  const BigRat& R(int i, int j, int k, int l) const {
    return entries[static_cast<std::size_t>(((i * r + j) * r + k) * r + l)];
  }
};

CurvaturePointData curvature_at(const MPoly& f, int r, const std::vector<BigRat>& y);
CurvaturePointData curvature_at(const MetricField& m, const std::vector<BigRat>& y);

/// Ricci by contraction of the pointwise tensor; equals the exact value of
/// -(1/4) d^2 log det g / dy dy.
Mat<BigRat> ricci_at(const CurvaturePointData& c);

/// Scalar curvature at a point: kappa * sum g^kl Ricci_kl.
BigRat scalar_curvature_at(const CubicForm& f, const std::vector<BigRat>& y);

/// The frozen scalar normalization (1 or 2), fixed once by exact comparison
/// of the symbolic STU scalar against its known closed form.
int scalar_kappa();

/// Symbolic check of the curvature identity with denominators cleared; holds
/// for parametric rings (trailing variables beyond r act as parameters).
/// Returns true iff every cleared-entry residual is the zero polynomial.
bool curvature_identity_holds(const MPoly& f, int r);

/// Max |residual| of the identity evaluated exactly at a point (any r).
BigRat curvature_identity_residual_at(const CubicForm& f,
                                      const std::vector<BigRat>& y);

/// Holomorphic sectional curvature H(v) = R(v,vbar,v,vbar)/g(v,vbar)^2 and
/// bisectional curvature B(v,w) = R(v,vbar,w,wbar)/(g(v,vbar) g(w,wbar)),
/// exact for rational complex directions.
BigRat hsc_at(const MetricField& m, const std::vector<BigRat>& y,
              const std::vector<CRat>& v);
BigRat bisectional_at(const MetricField& m, const std::vector<BigRat>& y,
                      const std::vector<CRat>& v, const std::vector<CRat>& w);

/// Same contractions from precomputed point data (batch scans).
BigRat hsc_from(const CurvaturePointData& c, const std::vector<CRat>& v);
BigRat bisectional_from(const CurvaturePointData& c, const std::vector<CRat>& v,
                        const std::vector<CRat>& w);
BigRat scalar_from(const CurvaturePointData& c);

}  // namespace amwp

#endif  // AMWP_CURVATURE_HPP
