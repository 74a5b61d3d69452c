#ifndef AMWP_IDENTITIES_HPP
#define AMWP_IDENTITIES_HPP

#include <optional>
#include <vector>

#include "amwp/curvature.hpp"
#include "amwp/metric.hpp"

namespace amwp {

/// det G = (1/2) f^3 H as an exact polynomial identity (ternary cubics; the
/// ambient ring may carry extra parameter variables).
bool det_g_factorization_holds(const MPoly& f, int r);
bool det_g_factorization_holds(const CubicForm& f);

/// C(i,j)_pq = f_ijp f_ijq: rank <= 1, positive semi-definite.
Mat<BigRat> c_tensor_slice(const CubicForm& f, int i, int j);

/// -(1/8) tr(B C(i,j)) / (H f^3), the cubic tail of the curvature identity
/// for the entry R_iijj, as a normalized rational function.  Requires r = 3.
RatFn trace_term(const CubicForm& f, int i, int j);

/// The family y1^3 + y2 (a y2^2 + 3 b y2 y3 + 3 c y3^2); its Hessian
/// determinant vanishes on the type II wall y1 = 0.
CubicForm type2_family(const BigRat& a, const BigRat& b, const BigRat& c);

struct Type2TraceResult {
  bool ok = false;       // quotient exists and is a nonzero constant
  BigRat constant;       // tr(B C(1,1)) / (((b^2-ac) y2^2 + bc y2 y3 + c^2 y3^2)(f - 3 y1^3) f)
};

/// Exact division certificate for the type II trace factorization.
/// Throws std::invalid_argument when b = c = 0 (the divisor degenerates).
Type2TraceResult type2_trace_constant(const BigRat& a, const BigRat& b,
                                      const BigRat& c);

/// The frozen constant the division produces for every admissible (a,b,c);
/// regression-tested against fresh computations.
const BigRat& type2_trace_expected();

struct ScanRow {
  BigRat s;
  std::vector<BigRat> y;
  BigRat f_value;
  std::optional<BigRat> scalar;  // empty at poles of the scalar curvature
  bool in_index_cone = false;
};

/// Exact scalar-curvature samples along a parametrized path; each component
/// of `path` is a univariate polynomial in the parameter s.
std::vector<ScanRow> blow_up_scan(const CubicForm& f,
                                  const std::vector<MPoly>& path,
                                  const std::vector<BigRat>& samples);

/// True iff the scalar curvature restricted to the path is constant in s,
/// verified as a cross-multiplied rational-function identity (no sampling).
bool scalar_constant_along_path(const CubicForm& f,
                                const std::vector<MPoly>& path);

}  // namespace amwp

#endif  // AMWP_IDENTITIES_HPP
