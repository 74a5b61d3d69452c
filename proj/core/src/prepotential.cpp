#include "amwp/prepotential.hpp"

#include <cmath>

namespace amwp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<Cplx> q_coords(const std::vector<Cplx>& t) {
  std::vector<Cplx> q(t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    q[j] = std::exp(Cplx(0.0, kTwoPi) * t[j]);
  return q;
}

Cplx q_power(const std::vector<Cplx>& q, const std::vector<int>& m) {
  Cplx acc(1.0, 0.0);
  for (std::size_t j = 0; j < q.size(); ++j)
    for (int k = 0; k < m[j]; ++k) acc *= q[j];
  return acc;
}

}  // namespace

Prepotential::Prepotential(const CubicForm& f) : cubic(f) {
  const int n = f.r();
  quadratic.assign(n, std::vector<Cplx>(n, Cplx(0.0, 0.0)));
  linear.assign(n, Cplx(0.0, 0.0));
}

void Prepotential::validate() const {
  const int n = r();
  if (static_cast<int>(quadratic.size()) != n ||
      static_cast<int>(linear.size()) != n)
    throw std::invalid_argument("Prepotential: coefficient shape mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(quadratic[i].size()) != n)
      throw std::invalid_argument("Prepotential: quadratic matrix not square");
    for (int j = 0; j < n; ++j)
      if (quadratic[i][j] != quadratic[j][i])
        throw std::invalid_argument("Prepotential: quadratic matrix not symmetric");
  }
  for (const auto& term : tail) {
    if (static_cast<int>(term.m.size()) != n)
      throw std::invalid_argument("Prepotential: tail exponent length mismatch");
    int norm1 = 0;
    for (int mj : term.m) {
      if (mj < 0) throw std::invalid_argument("Prepotential: negative tail exponent");
      norm1 += mj;
    }
    if (norm1 == 0)
      throw std::invalid_argument("Prepotential: tail term constant at q = 0");
    if (norm1 > 8)
      throw std::invalid_argument("Prepotential: tail exponent |m|_1 > 8");
  }
}

double log_argument(const Prepotential& P, const std::vector<Cplx>& t) {
  const int n = P.r();
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument("log_argument: wrong point dimension");
  MPoly f = P.cubic.polynomial();
  std::vector<Cplx> q = q_coords(t);

  Cplx F = f.evaluate_as<Cplx>(t) / 6.0;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) F += P.quadratic[l][m] * t[l] * t[m];
  for (int k = 0; k < n; ++k) F += P.linear[k] * t[k];
  F += P.constant;
  for (const auto& term : P.tail) F += term.c * q_power(q, term.m);

  Cplx bracket(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    Cplx dF = f.derivative(j).evaluate_as<Cplx>(t) / 6.0;
    for (int m = 0; m < n; ++m) dF += 2.0 * P.quadratic[j][m] * t[m];
    dF += P.linear[j];
    for (const auto& term : P.tail)
      if (term.m[j] > 0)
        dF += term.c * Cplx(0.0, kTwoPi) * static_cast<double>(term.m[j]) *
              q_power(q, term.m);
    bracket += (t[j] - std::conj(t[j])) * (dF + std::conj(dF));
  }
  bracket += 2.0 * std::conj(F) - 2.0 * F;
  Cplx arg = Cplx(0.0, 1.0) * bracket;
  return arg.real();
}

double kahler_potential(const Prepotential& P, const std::vector<Cplx>& t) {
  double arg = log_argument(P, t);
  if (!(arg > 0.0))
    throw std::domain_error("kahler_potential: non-positive log argument");
  return -std::log(arg);
}

double kahler_potential_reduced(const Prepotential& P,
                                const std::vector<Cplx>& t) {
  const int n = P.r();
  std::vector<double> x(n), y(n);
  for (int j = 0; j < n; ++j) {
    x[j] = t[j].real();
    y[j] = t[j].imag();
  }
  MPoly f = P.cubic.polynomial();
  double arg = 8.0 * f.evaluate_as<double>(y) / 6.0;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      arg += 4.0 * P.quadratic[l][m].imag() * (x[l] * x[m] + y[l] * y[m]);
  for (int k = 0; k < n; ++k) arg += 4.0 * P.linear[k].imag() * x[k];
  arg += 4.0 * P.constant.imag();
  // q-series contribution: 8 pi sum_j y_j Im(q_j dh/dq_j) + 4 Im(h).
  std::vector<Cplx> q = q_coords(t);
  for (const auto& term : P.tail) {
    Cplx val = term.c * q_power(q, term.m);
    for (int j = 0; j < n; ++j)
      arg += 8.0 * M_PI * y[j] * static_cast<double>(term.m[j]) * val.imag();
    arg += 4.0 * val.imag();
  }
  if (!(arg > 0.0))
    throw std::domain_error("kahler_potential_reduced: non-positive log argument");
  return -std::log(arg);
}

namespace {

// Guarded second mixed partial of K in the real coordinates (xi or yi), with
// one Richardson level; indices 0..2r-1 mean x_0..x_{r-1}, y_0..y_{r-1}.
struct PotentialSampler {
  const Prepotential* P;
  std::vector<Cplx> t0;

  double eval(const std::vector<double>& dx) const {
    std::vector<Cplx> t = t0;
    const int n = P->r();
    for (int j = 0; j < n; ++j) t[j] += Cplx(dx[j], dx[n + j]);
    return kahler_potential(*P, t);
  }

  double second(int a, int b, double h) const {
    const int n2 = 2 * P->r();
    std::vector<double> d(n2, 0.0);
    if (a == b) {
      d[a] = h;
      double fp = eval(d);
      d[a] = -h;
      double fm = eval(d);
      d[a] = 0.0;
      double f0 = eval(d);
      return (fp - 2.0 * f0 + fm) / (h * h);
    }
    d[a] = h; d[b] = h;
    double pp = eval(d);
    d[b] = -h;
    double pm = eval(d);
    d[a] = -h; d[b] = h;
    double mp = eval(d);
    d[b] = -h;
    double mm = eval(d);
    return (pp - pm - mp + mm) / (4.0 * h * h);
  }

  double second_richardson(int a, int b, double h) const {
    double c1 = second(a, b, h);
    double c2 = second(a, b, h / 2.0);
    return (4.0 * c2 - c1) / 3.0;
  }
};

}  // namespace

std::vector<std::vector<Cplx>> metric_numeric(const Prepotential& P,
                                              const std::vector<Cplx>& t,
                                              double* hermitian_residual) {
  P.validate();
  const int n = P.r();
  const double h = 1e-3;
  PotentialSampler sampler{&P, t};
  // Domain guard: the potential must exist on the whole stencil.
  {
    std::vector<double> corner(2 * n, 0.0);
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
      for (int b = 0; b < 2 * n; ++b)
        corner[b] = (mask & (1 << b)) ? h : -h;
      sampler.eval(corner);  // throws on domain exit
    }
  }

  std::vector<std::vector<Cplx>> g(n, std::vector<Cplx>(n, Cplx(0, 0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double xx = sampler.second_richardson(i, j, h);
      double yy = sampler.second_richardson(n + i, n + j, h);
      double xy = sampler.second_richardson(i, n + j, h);
      double yx = sampler.second_richardson(n + i, j, h);
      g[i][j] = 0.25 * Cplx(xx + yy, xy - yx);
    }
  }
  double resid = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      resid = std::max(resid, std::abs(g[i][j] - std::conj(g[j][i])));
  if (hermitian_residual) *hermitian_residual = resid;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Cplx avg = 0.5 * (g[i][j] + std::conj(g[j][i]));
      g[i][j] = avg;
      g[j][i] = std::conj(avg);
    }
  return g;
}

double metric_numeric_min_eigenvalue(const Prepotential& P,
                                     const std::vector<Cplx>& t) {
  auto g = metric_numeric(P, t);
  const int n = P.r();
  // Real embedding [[A, -B], [B, A]] of the Hermitian matrix A + iB has the
  // same spectrum, doubled.
  const int m = 2 * n;
  std::vector<std::vector<double>> s(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s[i][j] = g[i][j].real();
      s[n + i][n + j] = g[i][j].real();
      s[i][n + j] = -g[i][j].imag();
      s[n + i][j] = g[i][j].imag();
    }
  // Jacobi sweeps.
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += s[p][q] * s[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (std::fabs(s[p][q]) < 1e-18) continue;
        double theta = 0.5 * std::atan2(2.0 * s[p][q], s[q][q] - s[p][p]);
        double c = std::cos(theta), sn = std::sin(theta);
        for (int k = 0; k < m; ++k) {
          double akp = s[k][p], akq = s[k][q];
          s[k][p] = c * akp - sn * akq;
          s[k][q] = sn * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {
          double apk = s[p][k], aqk = s[q][k];
          s[p][k] = c * apk - sn * aqk;
          s[q][k] = sn * apk + c * aqk;
        }
      }
    }
  }
  double lo = s[0][0];
  for (int i = 1; i < m; ++i) lo = std::min(lo, s[i][i]);
  return lo;
}

double periodicity_deviation(const Prepotential& P, const std::vector<Cplx>& t,
                             const std::vector<std::vector<long>>& shifts) {
  const int n = P.r();
  auto base = metric_numeric(P, t);
  double worst = 0.0;
  for (const auto& shift : shifts) {
    std::vector<Cplx> ts = t;
    for (int j = 0; j < n; ++j) ts[j] += Cplx(static_cast<double>(shift[j]), 0.0);
    auto g = metric_numeric(P, ts);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(g[i][j] - base[i][j]));
  }
  return worst;
}

double metric_entry_norm_at_shift(const Prepotential& P,
                                  const std::vector<Cplx>& t,
                                  const std::vector<long>& shift) {
  std::vector<Cplx> ts = t;
  for (std::size_t j = 0; j < ts.size(); ++j)
    ts[j] += Cplx(static_cast<double>(shift[j]), 0.0);
  auto g = metric_numeric(P, ts);
  double norm = 0.0;
  for (const auto& row : g)
    for (const auto& e : row) norm = std::max(norm, std::abs(e));
  return norm;
}

namespace {

// Numeric curvature of the perturbed metric at t, same orientation as the
// exact pipeline (Ricci = -dd log det g).
std::vector<Cplx> curvature_numeric(const Prepotential& P,
                                    const std::vector<Cplx>& t) {
  const int n = P.r();
  const double H = 0.05;

  auto metric_at = [&](const std::vector<double>& dx) {
    std::vector<Cplx> ts = t;
    for (int j = 0; j < n; ++j) ts[j] += Cplx(dx[j], dx[n + j]);
    return metric_numeric(P, ts);
  };

  using CMat = std::vector<std::vector<Cplx>>;
  auto add = [&](const CMat& a, const CMat& b, Cplx ca, Cplx cb) {
    CMat out(n, std::vector<Cplx>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] = ca * a[i][j] + cb * b[i][j];
    return out;
  };

  // d g / d real-coordinate a (central, one Richardson level).
  auto d_real = [&](int a, double h) {
    std::vector<double> d(2 * n, 0.0);
    d[a] = h;
    CMat p = metric_at(d);
    d[a] = -h;
    CMat m = metric_at(d);
    return add(p, m, Cplx(1.0 / (2 * h), 0), Cplx(-1.0 / (2 * h), 0));
  };
  auto d_real_rich = [&](int a) {
    CMat c1 = d_real(a, H);
    CMat c2 = d_real(a, H / 2);
    return add(c2, c1, Cplx(4.0 / 3.0, 0), Cplx(-1.0 / 3.0, 0));
  };
  // d^2 g / d real a d real b.
  auto dd_real = [&](int a, int b, double h) {
    std::vector<double> d(2 * n, 0.0);
    if (a == b) {
      d[a] = h;
      CMat p = metric_at(d);
      d[a] = 0.0;
      CMat c = metric_at(d);
      d[a] = -h;
      CMat m = metric_at(d);
      CMat out = add(p, m, Cplx(1.0 / (h * h), 0), Cplx(1.0 / (h * h), 0));
      return add(out, c, Cplx(1, 0), Cplx(-2.0 / (h * h), 0));
    }
    d[a] = h; d[b] = h;
    CMat pp = metric_at(d);
    d[b] = -h;
    CMat pm = metric_at(d);
    d[a] = -h; d[b] = h;
    CMat mp = metric_at(d);
    d[b] = -h;
    CMat mm = metric_at(d);
    CMat out = add(pp, mm, Cplx(1.0 / (4 * h * h), 0), Cplx(1.0 / (4 * h * h), 0));
    return add(out, add(pm, mp, Cplx(1, 0), Cplx(1, 0)), Cplx(1, 0),
               Cplx(-1.0 / (4 * h * h), 0));
  };
  auto dd_real_rich = [&](int a, int b) {
    CMat c1 = dd_real(a, b, H);
    CMat c2 = dd_real(a, b, H / 2);
    return add(c2, c1, Cplx(4.0 / 3.0, 0), Cplx(-1.0 / 3.0, 0));
  };

  // Holomorphic derivatives: d/dt_k = (d_x - i d_y)/2, d/dtbar_l = (d_x + i d_y)/2.
  std::vector<CMat> dt(n), dtbar(n);
  for (int k = 0; k < n; ++k) {
    CMat dx = d_real_rich(k);
    CMat dy = d_real_rich(n + k);
    dt[k] = add(dx, dy, Cplx(0.5, 0), Cplx(0, -0.5));
    dtbar[k] = add(dx, dy, Cplx(0.5, 0), Cplx(0, 0.5));
  }

  CMat g0 = metric_numeric(P, t);
  // Complex inverse by Gauss-Jordan.
  CMat inv(n, std::vector<Cplx>(n, Cplx(0, 0)));
  {
    CMat a = g0;
    for (int i = 0; i < n; ++i) inv[i][i] = Cplx(1, 0);
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int rr = col; rr < n; ++rr)
        if (std::abs(a[rr][col]) > std::abs(a[piv][col])) piv = rr;
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      Cplx p = a[col][col];
      for (int cc = 0; cc < n; ++cc) {
        a[col][cc] /= p;
        inv[col][cc] /= p;
      }
      for (int rr = 0; rr < n; ++rr) {
        if (rr == col) continue;
        Cplx fac = a[rr][col];
        for (int cc = 0; cc < n; ++cc) {
          a[rr][cc] -= fac * a[col][cc];
          inv[rr][cc] -= fac * inv[col][cc];
        }
      }
    }
  }

  std::vector<Cplx> R(static_cast<std::size_t>(n) * n * n * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      // dd g / dt_k dtbar_l = (D_xx + D_yy + i (D_xy - D_yx)) / 4.
      CMat xx = dd_real_rich(k, l);
      CMat yy = dd_real_rich(n + k, n + l);
      CMat xy = dd_real_rich(k, n + l);
      CMat yx = dd_real_rich(n + k, l);
      CMat dd = add(add(xx, yy, Cplx(0.25, 0), Cplx(0.25, 0)),
                    add(xy, yx, Cplx(1, 0), Cplx(-1, 0)), Cplx(1, 0),
                    Cplx(0, 0.25));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Cplx sum(0, 0);
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              sum += inv[e][d] * dt[k][i][e] * dtbar[l][j][d];
          Cplx kn = dd[i][j] - sum;
          R[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)] = -kn;
        }
    }
  }
  return R;
}

}  // namespace

std::vector<AsymptoticRow> asymptotic_deviation(const Prepotential& P,
                                                const std::vector<double>& x0,
                                                const std::vector<BigRat>& y0,
                                                const std::vector<BigRat>& scales) {
  const int n = P.r();
  MetricField exact = amwp_metric(P.cubic);
  std::vector<AsymptoticRow> rows;
  for (const BigRat& s : scales) {
    std::vector<Cplx> t(n);
    std::vector<BigRat> yr(n);
    for (int j = 0; j < n; ++j) {
      yr[j] = s * y0[j];
      t[j] = Cplx(x0[j], yr[j].to_double());
    }
    AsymptoticRow row;
    row.s = s.to_double();
    auto g = metric_numeric(P, t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double ge = exact.g[i][j].evaluate(yr).to_double();
        row.metric_deviation =
            std::max(row.metric_deviation, std::abs(g[i][j] - Cplx(ge, 0)));
      }
    auto R = curvature_numeric(P, t);
    CurvaturePointData ex = curvature_at(exact, yr);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            Cplx num = R[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
            double exv = ex.R(i, j, k, l).to_double();
            row.curvature_deviation =
                std::max(row.curvature_deviation, std::abs(num - Cplx(exv, 0)));
          }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace amwp
