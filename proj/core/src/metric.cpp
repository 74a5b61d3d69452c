#include "amwp/metric.hpp"

#include <cmath>
#include <functional>

namespace amwp {

GMatrix g_matrix(const MPoly& f, int r) {
  GMatrix out;
  out.r = r;
  std::vector<MPoly> df(r);
  for (int i = 0; i < r; ++i) df[i] = f.derivative(i);
  out.G = make_mat<MPoly>(r, MPoly(f.nvars()));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      out.G[i][j] = df[i] * df[j] - f * df[i].derivative(j);
      if (j > i) out.G[j][i] = out.G[i][j];
    }
  out.detG = det(out.G);
  out.B = adjugate(out.G);
  return out;
}

GMatrix g_matrix(const CubicForm& f) { return g_matrix(f.polynomial(), f.r()); }

MetricField amwp_metric(const CubicForm& cf) {
  MetricField m;
  m.r = cf.r();
  m.f = cf.polynomial();
  m.gm = g_matrix(m.f, m.r);
  const int r = m.r;
  m.g = make_mat<RatFn>(r, RatFn());
  m.ginv = make_mat<RatFn>(r, RatFn());
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      m.g[i][j] = RatFn::make_factored(m.gm.G[i][j], BigRat(4), {{m.f, 2}});
      m.g[j][i] = m.g[i][j];
    }
  m.detg = RatFn::make_factored(m.gm.detG, BigRat(4).pow(r),
                                {{m.f, static_cast<unsigned>(2 * r)}});
  MPoly f2 = m.f * m.f;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      m.ginv[i][j] = RatFn::make_factored(m.gm.B[i][j].scaled(BigRat(4)) * f2,
                                          BigRat(1), {{m.gm.detG, 1}});
      m.ginv[j][i] = m.ginv[i][j];
    }
  return m;
}

bool metric_positive_at(const MetricField& m, const std::vector<BigRat>& y) {
  Mat<BigRat> gy = make_mat<BigRat>(m.r, BigRat(0));
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) gy[i][j] = m.g[i][j].evaluate(y);
  return positive_definite(gy);
}

BigRat slice_curvature_formula(const CubicForm& cf, const std::vector<BigRat>& y) {
  if (cf.r() != 3)
    throw std::invalid_argument("slice_curvature_formula: requires r = 3");
  if (!index_cone_contains(cf, y))
    throw std::invalid_argument("slice_curvature_formula: point outside index cone");
  HessianData hd = hessian_data(cf);
  BigRat hy = hd.h.evaluate(y);
  if (hy.is_zero())
    throw std::domain_error("slice_curvature_formula: h vanishes (blow-up locus)");
  BigRat fy = cf.polynomial().evaluate(y);
  BigRat S = s_invariant(cf);
  return BigRat(-9, 4) + S * fy * fy / (BigRat(4) * hy * hy);
}

namespace {

struct Chart {
  const MPoly* f;
  std::vector<MPoly> df;
  int solved;        // coordinate solved for
  int ua, ub;        // chart coordinates
  double seed;       // initial guess for the solved coordinate

  // Newton-solves f(y) = 1 for y[solved]; returns the full point.
  std::vector<double> lift(double u, double v) const {
    std::vector<double> y(3);
    y[ua] = u;
    y[ub] = v;
    y[solved] = seed;
    for (int it = 0; it < 80; ++it) {
      double val = f->evaluate_as<double>(y) - 1.0;
      if (std::fabs(val) < 1e-14) break;
      double slope = df[solved].evaluate_as<double>(y);
      y[solved] -= val / slope;
    }
    return y;
  }
};

// First fundamental form of the (1/6-scaled) centro-affine slice metric in
// the chart: coefficients E, F, G at (u, v).
void fundamental_form(const Chart& ch, const Mat<MPoly>& hess, double u,
                      double v, double& E, double& F, double& G) {
  std::vector<double> y = ch.lift(u, v);
  double fk = ch.df[ch.solved].evaluate_as<double>(y);
  double fa = ch.df[ch.ua].evaluate_as<double>(y);
  double fb = ch.df[ch.ub].evaluate_as<double>(y);
  // Tangents of the graph y_solved = phi(u, v).
  std::vector<double> Tu(3, 0.0), Tv(3, 0.0);
  Tu[ch.ua] = 1.0;
  Tu[ch.solved] = -fa / fk;
  Tv[ch.ub] = 1.0;
  Tv[ch.solved] = -fb / fk;
  double h[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = hess[i][j].evaluate_as<double>(y);
  auto m = [&](const std::vector<double>& X, const std::vector<double>& Y) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += h[i][j] * X[i] * Y[j];
    return -acc / 6.0;
  };
  E = m(Tu, Tu);
  F = m(Tu, Tv);
  G = m(Tv, Tv);
}

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Gaussian curvature at the chart origin via the Brioschi formula, with
// derivatives of E, F, G from Richardson-extrapolated central differences.
double brioschi(const std::function<void(double, double, double&, double&, double&)>& efg,
                double u0, double v0, double step) {
  struct Der {
    double E, F, G;
    double Eu, Ev, Fu, Fv, Gu, Gv;
    double Evv, Guu, Fuv;
  };
  auto derivs_at = [&](double d) {
    Der r{};
    double Ec, Fc, Gc;
    efg(u0, v0, Ec, Fc, Gc);
    double Ep, Fp, Gp, Em, Fm, Gm;
    efg(u0 + d, v0, Ep, Fp, Gp);
    efg(u0 - d, v0, Em, Fm, Gm);
    double Ep2, Fp2, Gp2, Em2, Fm2, Gm2;
    efg(u0, v0 + d, Ep2, Fp2, Gp2);
    efg(u0, v0 - d, Em2, Fm2, Gm2);
    r.E = Ec; r.F = Fc; r.G = Gc;
    r.Eu = (Ep - Em) / (2 * d);
    r.Fu = (Fp - Fm) / (2 * d);
    r.Gu = (Gp - Gm) / (2 * d);
    r.Ev = (Ep2 - Em2) / (2 * d);
    r.Fv = (Fp2 - Fm2) / (2 * d);
    r.Gv = (Gp2 - Gm2) / (2 * d);
    r.Evv = (Ep2 - 2 * Ec + Em2) / (d * d);
    r.Guu = (Gp - 2 * Gc + Gm) / (d * d);
    double Fpp, Fpm, Fmp, Fmm, dummyE, dummyG;
    efg(u0 + d, v0 + d, dummyE, Fpp, dummyG);
    efg(u0 + d, v0 - d, dummyE, Fpm, dummyG);
    efg(u0 - d, v0 + d, dummyE, Fmp, dummyG);
    efg(u0 - d, v0 - d, dummyE, Fmm, dummyG);
    r.Fuv = (Fpp - Fpm - Fmp + Fmm) / (4 * d * d);
    return r;
  };
  auto curvature_from = [&](const Der& r) {
    double m1[3][3] = {
        {-0.5 * r.Evv + r.Fuv - 0.5 * r.Guu, 0.5 * r.Eu, r.Fu - 0.5 * r.Ev},
        {r.Fv - 0.5 * r.Gu, r.E, r.F},
        {0.5 * r.Gv, r.F, r.G}};
    double m2[3][3] = {{0.0, 0.5 * r.Ev, 0.5 * r.Gu},
                       {0.5 * r.Ev, r.E, r.F},
                       {0.5 * r.Gu, r.F, r.G}};
    double denom = r.E * r.G - r.F * r.F;
    return (det3(m1) - det3(m2)) / (denom * denom);
  };
  // Second differences carry O(step^2) error; two Richardson levels.
  double k1 = curvature_from(derivs_at(step));
  double k2 = curvature_from(derivs_at(step / 2));
  double k3 = curvature_from(derivs_at(step / 4));
  double r1 = (4 * k2 - k1) / 3;
  double r2 = (4 * k3 - k2) / 3;
  return (16 * r2 - r1) / 15;
}

}  // namespace

double slice_curvature_numeric(const CubicForm& cf, const std::vector<BigRat>& y0) {
  if (cf.r() != 3)
    throw std::invalid_argument("slice_curvature_numeric: requires r = 3");
  if (!index_cone_contains(cf, y0))
    throw std::invalid_argument("slice_curvature_numeric: point outside index cone");
  MPoly f = cf.polynomial();
  std::vector<MPoly> df = {f.derivative(0), f.derivative(1), f.derivative(2)};
  std::vector<double> yd(3);
  for (int i = 0; i < 3; ++i) yd[i] = y0[i].to_double();
  double scale = std::cbrt(f.evaluate_as<double>(yd));
  std::vector<double> yhat(3);
  for (int i = 0; i < 3; ++i) yhat[i] = yd[i] / scale;

  // Prefer the steepest coordinate for the chart; fall back on degeneracy.
  std::vector<int> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(df[a].evaluate_as<double>(yhat)) >
           std::fabs(df[b].evaluate_as<double>(yhat));
  });
  Mat<MPoly> hess = hessian_data(cf).hess;
  for (int k : order) {
    double fk = df[k].evaluate_as<double>(yhat);
    if (std::fabs(fk) < 1e-9) continue;
    Chart ch;
    ch.f = &f;
    ch.df = df;
    ch.solved = k;
    ch.ua = (k + 1) % 3;
    ch.ub = (k + 2) % 3;
    ch.seed = yhat[k];
    auto efg = [&](double u, double v, double& E, double& F, double& G) {
      fundamental_form(ch, hess, u, v, E, F, G);
    };
    double step = 1e-2 * std::max(1.0, std::fabs(yhat[ch.ua]) + std::fabs(yhat[ch.ub]));
    return brioschi(efg, yhat[ch.ua], yhat[ch.ub], step);
  }
  throw std::domain_error("slice_curvature_numeric: all charts degenerate");
}

namespace {

// Exact metric entries evaluated at rational stencil points, differenced in
// doubles.  Step is a power of two so stencil points stay exactly rational.
struct MetricSampler {
  const MetricField* m;
  std::vector<BigRat> base;

  Mat<double> at(const std::vector<BigRat>& y) const {
    Mat<double> h = make_mat<double>(m->r, 0.0);
    for (int i = 0; i < m->r; ++i)
      for (int j = i; j < m->r; ++j) {
        h[i][j] = m->g[i][j].evaluate(y).to_double();
        h[j][i] = h[i][j];
      }
    return h;
  }

  std::vector<BigRat> shifted(int v, const BigRat& d) const {
    std::vector<BigRat> y = base;
    y[v] += d;
    return y;
  }
};

}  // namespace

double sectional_curvature_numeric(const MetricField& m,
                                   const std::vector<BigRat>& y0,
                                   const std::vector<double>& spanA,
                                   const std::vector<double>& spanB) {
  const int r = m.r;
  MetricSampler sampler{&m, y0};
  const BigRat step(1, 256);

  Mat<double> h0 = sampler.at(y0);

  // First and second derivatives of all entries, Richardson extrapolated.
  auto first = [&](int v, const BigRat& d) {
    Mat<double> hp = sampler.at(sampler.shifted(v, d));
    Mat<double> hm = sampler.at(sampler.shifted(v, -d));
    Mat<double> out = make_mat<double>(r, 0.0);
    double dd = d.to_double();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out[i][j] = (hp[i][j] - hm[i][j]) / (2 * dd);
    return out;
  };
  auto second = [&](int v, int w, const BigRat& d) {
    Mat<double> out = make_mat<double>(r, 0.0);
    double dd = d.to_double();
    if (v == w) {
      Mat<double> hp = sampler.at(sampler.shifted(v, d));
      Mat<double> hm = sampler.at(sampler.shifted(v, -d));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          out[i][j] = (hp[i][j] - 2 * h0[i][j] + hm[i][j]) / (dd * dd);
    } else {
      auto shift2 = [&](const BigRat& dv, const BigRat& dw) {
        std::vector<BigRat> y = y0;
        y[v] += dv;
        y[w] += dw;
        return sampler.at(y);
      };
      Mat<double> pp = shift2(d, d), pm = shift2(d, -d), mp = shift2(-d, d),
                  mm = shift2(-d, -d);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          out[i][j] =
              (pp[i][j] - pm[i][j] - mp[i][j] + mm[i][j]) / (4 * dd * dd);
    }
    return out;
  };
  auto richardson = [&](auto&& fn, auto&&... idx) {
    Mat<double> d1 = fn(idx..., step);
    Mat<double> d2 = fn(idx..., step / BigRat(2));
    Mat<double> out = make_mat<double>(r, 0.0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out[i][j] = (4 * d2[i][j] - d1[i][j]) / 3;
    return out;
  };

  std::vector<Mat<double>> dh(r);
  for (int v = 0; v < r; ++v) dh[v] = richardson(first, v);
  std::vector<std::vector<Mat<double>>> d2h(r, std::vector<Mat<double>>(r));
  for (int v = 0; v < r; ++v)
    for (int w = v; w < r; ++w) {
      d2h[v][w] = richardson(second, v, w);
      if (w > v) d2h[w][v] = d2h[v][w];
    }

  // Christoffel symbols of the first and second kind.
  std::vector<std::vector<double>> hinv(r, std::vector<double>(r, 0.0));
  {
    Mat<BigRat> hr = make_mat<BigRat>(r, BigRat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) hr[i][j] = m.g[i][j].evaluate(y0);
    Mat<BigRat> hinv_exact = inverse(hr);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) hinv[i][j] = hinv_exact[i][j].to_double();
  }
  auto gamma = [&](int n, int k, int l) {
    double acc = 0.0;
    for (int s = 0; s < r; ++s)
      acc += hinv[n][s] * (dh[k][l][s] + dh[l][k][s] - dh[s][k][l]);
    return 0.5 * acc;
  };

  // All-lower curvature from second derivatives plus Christoffel products,
  // oriented so the round sphere has positive sectional curvature.
  auto riemann = [&](int i, int k, int l, int mI) {
    double second_part = 0.5 * (d2h[k][mI][i][l] + d2h[i][l][k][mI] -
                                d2h[k][l][i][mI] - d2h[i][mI][k][l]);
    double gg = 0.0;
    for (int n = 0; n < r; ++n)
      for (int p = 0; p < r; ++p)
        gg += h0[n][p] * (gamma(n, k, mI) * gamma(p, i, l) -
                          gamma(n, k, l) * gamma(p, i, mI));
    return second_part + gg;
  };

  auto inner = [&](const std::vector<double>& X, const std::vector<double>& Y) {
    double acc = 0.0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) acc += h0[i][j] * X[i] * Y[j];
    return acc;
  };
  double numer = 0.0;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l)
        for (int mI = 0; mI < r; ++mI)
          numer += riemann(i, k, l, mI) * spanA[i] * spanB[k] * spanB[l] * spanA[mI];
  double denom = inner(spanA, spanA) * inner(spanB, spanB) -
                 inner(spanA, spanB) * inner(spanA, spanB);
  return numer / denom;
}

double radial_flatness_check(const CubicForm& cf, const std::vector<BigRat>& y0) {
  MetricField m = amwp_metric(cf);
  const int r = m.r;
  std::vector<double> radial(r);
  for (int i = 0; i < r; ++i) radial[i] = y0[i].to_double();
  double worst = 0.0;
  for (int w = 0; w < r; ++w) {
    std::vector<double> dir(r, 0.0);
    dir[w] = 1.0;
    // Skip directions parallel to the ray.
    double cross = 0.0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (i != j) cross += std::fabs(radial[i] * dir[j] - radial[j] * dir[i]);
    if (cross < 1e-12) continue;
    double k = sectional_curvature_numeric(m, y0, radial, dir);
    worst = std::max(worst, std::fabs(k));
  }
  return worst;
}

}  // namespace amwp
