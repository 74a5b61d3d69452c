#include "amwp/curvature.hpp"

#include <array>
#include <map>
#include <set>

namespace amwp {

namespace {

// Canonical representative of (i,j,k,l) under the Kaehler symmetries
// (i<->k), (j<->l) and the reality swap (ij)<->(ji),(kl)<->(lk).
std::array<int, 4> canonical_index(int i, int j, int k, int l) {
  std::array<std::array<int, 4>, 4> images = {{
      {i, j, k, l}, {k, j, i, l}, {i, l, k, j}, {k, l, i, j}}};
  std::array<int, 4> best = images[0];
  for (const auto& im : images) {
    std::array<int, 4> swapped = {im[1], im[0], im[3], im[2]};
    if (im < best) best = im;
    if (swapped < best) best = swapped;
  }
  return best;
}

// Shared polynomial scaffolding: derivatives of f and of the G matrix.
struct SymbolicKit {
  const MPoly* f;
  int r;
  int nv;
  std::vector<MPoly> f1;                            // f_i
  std::vector<std::vector<MPoly>> f2;               // f_ij
  std::vector<std::vector<std::vector<MPoly>>> f3;  // f_ijk
  Mat<MPoly> u;                                     // G_ij

  explicit SymbolicKit(const MPoly& poly, int active)
      : f(&poly), r(active), nv(poly.nvars()) {
    f1.resize(r);
    for (int i = 0; i < r; ++i) f1[i] = poly.derivative(i);
    f2.assign(r, std::vector<MPoly>(r, MPoly(nv)));
    f3.assign(r, std::vector<std::vector<MPoly>>(
                     r, std::vector<MPoly>(r, MPoly(nv))));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        f2[i][j] = f1[i].derivative(j);
        for (int k = 0; k < r; ++k) f3[i][j][k] = f2[i][j].derivative(k);
      }
    u = make_mat<MPoly>(r, MPoly(nv));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) u[i][j] = f1[i] * f1[j] - poly * f2[i][j];
  }

  // d u_ij / dy_k
  MPoly du(int i, int j, int k) const {
    return f2[i][k] * f1[j] + f1[i] * f2[j][k] - f1[k] * f2[i][j] -
           (*f) * f3[i][j][k];
  }

  // v_ijk with d g_ij/dy_k = v_ijk / (4 f^3)
  MPoly v(int i, int j, int k) const {
    return du(i, j, k) * (*f) - u[i][j].scaled(BigRat(2)) * f1[k];
  }

  // d^2 u_ij / dy_k dy_l  (f is cubic, so fourth derivatives vanish)
  MPoly ddu(int i, int j, int k, int l) const {
    return f3[i][k][l] * f1[j] + f2[i][k] * f2[j][l] + f2[i][l] * f2[j][k] +
           f1[i] * f3[j][k][l] - f2[k][l] * f2[i][j] - f1[k] * f3[i][j][l] -
           f1[l] * f3[i][j][k];
  }

  // w_ijkl with d^2 g_ij/dy_k dy_l = w_ijkl / (4 f^4)
  MPoly w(int i, int j, int k, int l) const {
    MPoly dv = ddu(i, j, k, l) * (*f) + du(i, j, k) * f1[l] -
               du(i, j, l).scaled(BigRat(2)) * f1[k] -
               u[i][j].scaled(BigRat(2)) * f2[k][l];
    return dv * (*f) - v(i, j, k).scaled(BigRat(3)) * f1[l];
  }
};

}  // namespace

CurvatureField curvature_field(const MetricField& m) {
  if (m.r > 3)
    throw std::invalid_argument(
        "curvature_field: symbolic mode is limited to r <= 3; use curvature_at");
  const int r = m.r;
  SymbolicKit kit(m.f, r);
  const MPoly& DG = m.gm.detG;
  const Mat<MPoly>& B = m.gm.B;

  CurvatureField out;
  out.r = r;
  out.kappa = scalar_kappa();
  out.entries.assign(static_cast<std::size_t>(r) * r * r * r, RatFn());

  // Cache v polynomials (symmetric in the first two slots).
  std::vector<MPoly> vcache(static_cast<std::size_t>(r) * r * r, MPoly(kit.nv));
  auto vref = [&](int i, int e, int k) -> MPoly& {
    return vcache[static_cast<std::size_t>((i * r + e) * r + k)];
  };
  for (int i = 0; i < r; ++i)
    for (int e = i; e < r; ++e)
      for (int k = 0; k < r; ++k) {
        MPoly val = kit.v(i, e, k);
        vref(i, e, k) = val;
        if (e > i) vref(e, i, k) = val;
      }

  std::map<std::array<int, 4>, RatFn> computed;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          auto key = canonical_index(i, j, k, l);
          auto it = computed.find(key);
          if (it == computed.end()) {
            const auto [ci, cj, ck, cl] = key;
            MPoly sum(kit.nv);
            for (int d = 0; d < r; ++d)
              for (int e = 0; e < r; ++e)
                sum += B[e][d] * vref(ci, e, ck) * vref(cj, d, cl);
            MPoly num = -(kit.w(ci, cj, ck, cl) * DG - sum);
            RatFn entry = RatFn::make_factored(
                std::move(num), BigRat(16), {{m.f, 4}, {DG, 1}});
            it = computed.emplace(key, std::move(entry)).first;
          }
          out.entries[static_cast<std::size_t>(((i * r + j) * r + k) * r + l)] =
              it->second;
        }

  // Ricci_kl = -(1/4) d^2 log det g = -[(DG_kl DG - DG_k DG_l) f^2
  //            + 2 r u_kl DG^2] / (4 DG^2 f^2).
  std::vector<MPoly> DG1(r);
  for (int k = 0; k < r; ++k) DG1[k] = DG.derivative(k);
  MPoly f2 = m.f * m.f;
  out.ricci = make_mat<RatFn>(r, RatFn());
  for (int k = 0; k < r; ++k)
    for (int l = k; l < r; ++l) {
      MPoly num = -((DG1[k].derivative(l) * DG - DG1[k] * DG1[l]) * f2 +
                    kit.u[k][l].scaled(BigRat(2 * r)) * DG * DG);
      out.ricci[k][l] =
          RatFn::make_factored(std::move(num), BigRat(4), {{DG, 2}, {m.f, 2}});
      out.ricci[l][k] = out.ricci[k][l];
    }

  // scalar = kappa [ -f^2 sum B_kl (DG_kl DG - DG_k DG_l) / DG^3 - 2 r^2 ].
  MPoly nsc(kit.nv);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      nsc += B[k][l] * (DG1[k].derivative(l) * DG - DG1[k] * DG1[l]);
  MPoly num = -(f2 * nsc + DG.pow(3).scaled(BigRat(2L * r * r)));
  out.scalar = RatFn::make_factored(num.scaled(BigRat(out.kappa)), BigRat(1),
                                    {{DG, 3}});
  return out;
}

CurvaturePointData curvature_at(const MPoly& f, int r,
                                const std::vector<BigRat>& y) {
  if (f.nvars() != static_cast<int>(y.size()))
    throw std::invalid_argument("curvature_at: wrong point dimension");
  BigRat fv = f.evaluate(y);
  if (fv.is_zero()) throw std::domain_error("curvature_at: pole (f = 0)");

  std::vector<BigRat> f1(r);
  Mat<BigRat> f2v = make_mat<BigRat>(r, BigRat(0));
  std::vector<std::vector<std::vector<BigRat>>> f3v(
      r, std::vector<std::vector<BigRat>>(r, std::vector<BigRat>(r, BigRat(0))));
  {
    std::vector<MPoly> d1(r);
    for (int i = 0; i < r; ++i) {
      d1[i] = f.derivative(i);
      f1[i] = d1[i].evaluate(y);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        MPoly d2 = d1[i].derivative(j);
        f2v[i][j] = d2.evaluate(y);
        for (int k = 0; k < r; ++k) f3v[i][j][k] = d2.derivative(k).evaluate(y);
      }
  }

  Mat<BigRat> u = make_mat<BigRat>(r, BigRat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) u[i][j] = f1[i] * f1[j] - fv * f2v[i][j];

  auto du = [&](int i, int j, int k) {
    return f2v[i][k] * f1[j] + f1[i] * f2v[j][k] - f1[k] * f2v[i][j] -
           fv * f3v[i][j][k];
  };
  auto vfun = [&](int i, int j, int k) {
    return du(i, j, k) * fv - BigRat(2) * u[i][j] * f1[k];
  };
  auto ddu = [&](int i, int j, int k, int l) {
    return f3v[i][k][l] * f1[j] + f2v[i][k] * f2v[j][l] +
           f2v[i][l] * f2v[j][k] + f1[i] * f3v[j][k][l] -
           f2v[k][l] * f2v[i][j] - f1[k] * f3v[i][j][l] - f1[l] * f3v[i][j][k];
  };

  CurvaturePointData out;
  out.r = r;
  out.f_val = fv;
  BigRat f2s = fv * fv;
  out.g = make_mat<BigRat>(r, BigRat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.g[i][j] = u[i][j] / (BigRat(4) * f2s);
  out.ginv = inverse(out.g);

  std::vector<BigRat> vcache(static_cast<std::size_t>(r) * r * r, BigRat(0));
  auto vr = [&](int i, int e, int k) -> BigRat& {
    return vcache[static_cast<std::size_t>((i * r + e) * r + k)];
  };
  for (int i = 0; i < r; ++i)
    for (int e = i; e < r; ++e)
      for (int k = 0; k < r; ++k) {
        BigRat val = vfun(i, e, k);
        vr(i, e, k) = val;
        if (e > i) vr(e, i, k) = val;
      }

  BigRat f3s = f2s * fv;
  BigRat f4s = f2s * f2s;
  out.entries.assign(static_cast<std::size_t>(r) * r * r * r, BigRat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          BigRat dv = ddu(i, j, k, l) * fv + du(i, j, k) * f1[l] -
                      BigRat(2) * du(i, j, l) * f1[k] -
                      BigRat(2) * u[i][j] * f2v[k][l];
          BigRat w = dv * fv - BigRat(3) * vfun(i, j, k) * f1[l];
          BigRat sum(0);
          for (int d = 0; d < r; ++d)
            for (int e = 0; e < r; ++e)
              sum += out.ginv[e][d] * vr(i, e, k) * vr(j, d, l);
          // R = -(1/4)[ w/(4 f^4) - sum/(16 f^6) ]
          BigRat kn = (w / (BigRat(4) * f4s) - sum / (BigRat(16) * f3s * f3s)) /
                      BigRat(4);
          out.entries[static_cast<std::size_t>(((i * r + j) * r + k) * r + l)] =
              -kn;
        }
  return out;
}

CurvaturePointData curvature_at(const MetricField& m,
                                const std::vector<BigRat>& y) {
  return curvature_at(m.f, m.r, y);
}

Mat<BigRat> ricci_at(const CurvaturePointData& c) {
  const int r = c.r;
  Mat<BigRat> ric = make_mat<BigRat>(r, BigRat(0));
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      BigRat acc(0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) acc += c.ginv[i][j] * c.R(i, j, k, l);
      ric[k][l] = acc;
    }
  return ric;
}

// Fixed once by exact agreement of the symbolic STU scalar with its known
// closed form; kappa = 2 does not match.
int scalar_kappa() { return 1; }

BigRat scalar_curvature_at(const CubicForm& f, const std::vector<BigRat>& y) {
  return scalar_from(curvature_at(f.polynomial(), f.r(), y));
}

bool curvature_identity_holds(const MPoly& f, int r) {
  SymbolicKit kit(f, r);
  Mat<MPoly> G = kit.u;
  MPoly DG = det(G);
  Mat<MPoly> B = adjugate(G);
  MPoly f4 = f.pow(4);

  std::vector<MPoly> vcache(static_cast<std::size_t>(r) * r * r, MPoly(kit.nv));
  auto vref = [&](int i, int e, int k) -> MPoly& {
    return vcache[static_cast<std::size_t>((i * r + e) * r + k)];
  };
  for (int i = 0; i < r; ++i)
    for (int e = i; e < r; ++e)
      for (int k = 0; k < r; ++k) {
        MPoly val = kit.v(i, e, k);
        vref(i, e, k) = val;
        if (e > i) vref(e, i, k) = val;
      }

  std::set<std::array<int, 4>> seen;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          auto key = canonical_index(i, j, k, l);
          if (!seen.insert(key).second) continue;
          const auto [ci, cj, ck, cl] = key;
          MPoly sum_v(kit.nv);
          for (int d = 0; d < r; ++d)
            for (int e = 0; e < r; ++e)
              sum_v += B[e][d] * vref(ci, e, ck) * vref(cj, d, cl);
          MPoly lhs = kit.w(ci, cj, ck, cl) * DG - sum_v;
          MPoly quad =
              (kit.u[ci][cj] * kit.u[ck][cl] + kit.u[ci][cl] * kit.u[ck][cj]) *
              DG;
          MPoly cubic_term(kit.nv);
          for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q)
              cubic_term += B[p][q] * kit.f3[ci][ck][p] * kit.f3[cj][cl][q];
          MPoly residual = lhs - quad + f4 * cubic_term;
          if (!residual.is_zero()) return false;
        }
  return true;
}

BigRat curvature_identity_residual_at(const CubicForm& cf,
                                      const std::vector<BigRat>& y) {
  const int r = cf.r();
  MPoly f = cf.polynomial();
  CurvaturePointData c = curvature_at(f, r, y);
  BigRat f2 = c.f_val * c.f_val;
  BigRat worst(0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          BigRat cubic_term(0);
          for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q)
              cubic_term += c.ginv[p][q] * cf.third_derivative(i, k, p) *
                            cf.third_derivative(j, l, q);
          BigRat rhs = -c.g[i][j] * c.g[k][l] - c.g[i][l] * c.g[k][j] +
                       cubic_term / (BigRat(64) * f2);
          BigRat res = (c.R(i, j, k, l) - rhs).abs();
          if (res > worst) worst = res;
        }
  return worst;
}

namespace {

CRat contract(const CurvaturePointData& c, const std::vector<CRat>& v,
              const std::vector<CRat>& w) {
  CRat acc;
  for (int i = 0; i < c.r; ++i)
    for (int j = 0; j < c.r; ++j)
      for (int k = 0; k < c.r; ++k)
        for (int l = 0; l < c.r; ++l) {
          CRat coeff(c.R(i, j, k, l), BigRat(0));
          acc = acc + coeff * v[i] * v[j].conj() * w[k] * w[l].conj();
        }
  return acc;
}

CRat pairing(const Mat<BigRat>& g, const std::vector<CRat>& v,
             const std::vector<CRat>& w) {
  CRat acc;
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    for (int j = 0; j < static_cast<int>(g.size()); ++j) {
      CRat coeff(g[i][j], BigRat(0));
      acc = acc + coeff * v[i] * w[j].conj();
    }
  return acc;
}

bool all_zero(const std::vector<CRat>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

BigRat hsc_from(const CurvaturePointData& c, const std::vector<CRat>& v) {
  if (all_zero(v)) throw std::invalid_argument("hsc: zero direction");
  CRat num = contract(c, v, v);
  CRat den = pairing(c.g, v, v);
  if (!num.im.is_zero())
    throw std::logic_error("hsc: non-real sectional curvature");
  return num.re / (den.re * den.re);
}

BigRat bisectional_from(const CurvaturePointData& c, const std::vector<CRat>& v,
                        const std::vector<CRat>& w) {
  if (all_zero(v) || all_zero(w))
    throw std::invalid_argument("bisectional: zero direction");
  CRat num = contract(c, v, w);
  if (!num.im.is_zero())
    throw std::logic_error("bisectional: non-real bisectional curvature");
  return num.re / (pairing(c.g, v, v).re * pairing(c.g, w, w).re);
}

BigRat scalar_from(const CurvaturePointData& c) {
  Mat<BigRat> ric = ricci_at(c);
  BigRat acc(0);
  for (int k = 0; k < c.r; ++k)
    for (int l = 0; l < c.r; ++l) acc += c.ginv[k][l] * ric[k][l];
  return BigRat(scalar_kappa()) * acc;
}

BigRat hsc_at(const MetricField& m, const std::vector<BigRat>& y,
              const std::vector<CRat>& v) {
  return hsc_from(curvature_at(m, y), v);
}

BigRat bisectional_at(const MetricField& m, const std::vector<BigRat>& y,
                      const std::vector<CRat>& v, const std::vector<CRat>& w) {
  return bisectional_from(curvature_at(m, y), v, w);
}

}  // namespace amwp
