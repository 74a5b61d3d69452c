#include "amwp/identities.hpp"

namespace amwp {

bool det_g_factorization_holds(const MPoly& f, int r) {
  GMatrix gm = g_matrix(f, r);
  Mat<MPoly> hess = make_mat<MPoly>(r, MPoly(f.nvars()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) hess[i][j] = f.derivative(i).derivative(j);
  MPoly H = det(hess);
  MPoly rhs = (f.pow(3) * H).scaled(BigRat(1, 2));
  return gm.detG == rhs;
}

bool det_g_factorization_holds(const CubicForm& f) {
  return det_g_factorization_holds(f.polynomial(), f.r());
}

Mat<BigRat> c_tensor_slice(const CubicForm& f, int i, int j) {
  const int r = f.r();
  Mat<BigRat> c = make_mat<BigRat>(r, BigRat(0));
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      c[p][q] = f.third_derivative(i, j, p) * f.third_derivative(i, j, q);
  return c;
}

RatFn trace_term(const CubicForm& cf, int i, int j) {
  if (cf.r() != 3) throw std::invalid_argument("trace_term: requires r = 3");
  MPoly f = cf.polynomial();
  GMatrix gm = g_matrix(f, 3);
  MPoly H = hessian_data(cf).H;
  MPoly num(3);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      BigRat c = cf.third_derivative(i, j, p) * cf.third_derivative(i, j, q);
      if (!c.is_zero()) num += gm.B[p][q].scaled(c);
    }
  return RatFn::make_factored(-num, BigRat(8), {{H, 1}, {f, 3}});
}

CubicForm type2_family(const BigRat& a, const BigRat& b, const BigRat& c) {
  std::map<Exponents, BigRat> mono;
  mono[{3u, 0u, 0u}] = BigRat(1);
  if (!a.is_zero()) mono[{0u, 3u, 0u}] = a;
  if (!b.is_zero()) mono[{0u, 2u, 1u}] = BigRat(3) * b;
  if (!c.is_zero()) mono[{0u, 1u, 2u}] = BigRat(3) * c;
  return CubicForm::from_monomials(3, mono);
}

Type2TraceResult type2_trace_constant(const BigRat& a, const BigRat& b,
                                      const BigRat& c) {
  if (b.is_zero() && c.is_zero())
    throw std::invalid_argument(
        "type2_trace_constant: requires (b, c) != (0, 0)");
  CubicForm cf = type2_family(a, b, c);
  MPoly f = cf.polynomial();
  GMatrix gm = g_matrix(f, 3);

  // tr(B C(1,1)) with C(1,1) = 36 e_1 e_1^T (f_11p vanishes except p = 1).
  MPoly trace = gm.B[0][0].scaled(BigRat(36));

  MPoly y2 = MPoly::variable(3, 1);
  MPoly y3 = MPoly::variable(3, 2);
  MPoly quadratic = (y2 * y2).scaled(b * b - a * c) +
                    (y2 * y3).scaled(b * c) + (y3 * y3).scaled(c * c);
  MPoly cube = MPoly::variable(3, 0).pow(3);
  MPoly divisor = quadratic * (f - cube.scaled(BigRat(3))) * f;

  Type2TraceResult out;
  if (divisor.is_zero()) return out;
  auto q = trace.divide_exact(divisor);
  if (!q || !q->is_constant()) return out;
  out.constant = q->constant_term();
  out.ok = !out.constant.is_zero();
  return out;
}

const BigRat& type2_trace_expected() {
  // Computed once by the exact division above; pinned as a regression value.
  static const BigRat k = BigRat(648);
  return k;
}

std::vector<ScanRow> blow_up_scan(const CubicForm& cf,
                                  const std::vector<MPoly>& path,
                                  const std::vector<BigRat>& samples) {
  const int r = cf.r();
  if (static_cast<int>(path.size()) != r)
    throw std::invalid_argument("blow_up_scan: path dimension mismatch");
  MPoly f = cf.polynomial();
  std::vector<ScanRow> rows;
  rows.reserve(samples.size());
  for (const BigRat& s : samples) {
    ScanRow row;
    row.s = s;
    row.y.resize(r);
    std::vector<BigRat> at{s};
    for (int i = 0; i < r; ++i) row.y[i] = path[i].evaluate(at);
    row.f_value = f.evaluate(row.y);
    row.in_index_cone = index_cone_contains(cf, row.y);
    try {
      row.scalar = scalar_curvature_at(cf, row.y);
    } catch (const std::domain_error&) {
      row.scalar.reset();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool scalar_constant_along_path(const CubicForm& cf,
                                const std::vector<MPoly>& path) {
  const int r = cf.r();
  if (static_cast<int>(path.size()) != r)
    throw std::invalid_argument("scalar_constant_along_path: dimension mismatch");
  // Unnormalized scalar = -kappa (f^2 N + 2 r^2 DG^3) / DG^3; the constancy
  // check cross-multiplies, so no gcd reduction is needed.
  MPoly f = cf.polynomial();
  GMatrix gm = g_matrix(f, r);
  std::vector<MPoly> DG1(r);
  for (int k = 0; k < r; ++k) DG1[k] = gm.detG.derivative(k);
  MPoly nsc(r);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      nsc += gm.B[k][l] * (DG1[k].derivative(l) * gm.detG - DG1[k] * DG1[l]);
  MPoly num = f * f * nsc + gm.detG.pow(3).scaled(BigRat(2L * r * r));
  MPoly den = gm.detG.pow(3);

  MPoly num_s = num.substitute(path);
  MPoly den_s = den.substitute(path);
  std::vector<BigRat> one{BigRat(1)};
  BigRat n1 = num_s.evaluate(one);
  BigRat d1 = den_s.evaluate(one);
  return num_s.scaled(d1) == den_s.scaled(n1);
}

}  // namespace amwp
