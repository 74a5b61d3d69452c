#include <doctest.h>

#include <cmath>

#include "amwp/catalog.hpp"
#include "amwp/identities.hpp"
#include "amwp/metric.hpp"
#include "amwp/verify.hpp"

using namespace amwp;

namespace {

CubicForm stu() { return catalog_get("STU").cubic.value(); }

CubicForm product_cubic() {
  return CubicForm::from_intersection(3, {{{0, 1, 2}, BigRat(1, 6)}});
}

// det(g) for STU in lowest terms: 27 (y1 y2 + 2 y1 y3 + y3^2 + y2 y3) over
// 64 y1^2 (3 y2 y3 + 4 y1^2 + 3 y1 y2 + 6 y1 y3 + 3 y3^2)^3.
RatFn stu_detg_golden() {
  MPoly y1 = MPoly::variable(3, 0), y2 = MPoly::variable(3, 1),
        y3 = MPoly::variable(3, 2);
  MPoly num = (y1 * y2 + (y1 * y3).scaled(BigRat(2)) + y3 * y3 + y2 * y3)
                  .scaled(BigRat(27));
  MPoly quad = (y2 * y3).scaled(BigRat(3)) + (y1 * y1).scaled(BigRat(4)) +
               (y1 * y2).scaled(BigRat(3)) + (y1 * y3).scaled(BigRat(6)) +
               (y3 * y3).scaled(BigRat(3));
  MPoly den = (y1 * y1 * quad.pow(3)).scaled(BigRat(64));
  return RatFn::make(num, den);
}

}  // namespace

TEST_CASE("STU det(g) equals the known closed form exactly") {
  MetricField m = amwp_metric(stu());
  CHECK(m.detg == stu_detg_golden());
}

TEST_CASE("product cubic y1 y2 y3 has diagonal metric 1/(4 y_i^2)") {
  MetricField m = amwp_metric(product_cubic());
  for (int i = 0; i < 3; ++i) {
    MPoly yi = MPoly::variable(3, i);
    CHECK(m.g[i][i] ==
          RatFn::make(MPoly::constant(3, BigRat(1)), (yi * yi).scaled(BigRat(4))));
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(m.g[i][j].is_zero());
  }
}

TEST_CASE("metric structural invariants") {
  MetricField m = amwp_metric(stu());
  SUBCASE("symmetry") {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.g[i][j] == m.g[j][i]);
  }
  SUBCASE("g ginv = identity as rational functions") {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        RatFn acc = RatFn::constant(3, BigRat(0));
        for (int k = 0; k < 3; ++k) acc += m.g[i][k] * m.ginv[k][j];
        CHECK(acc == RatFn::constant(3, BigRat(i == j ? 1 : 0)));
      }
  }
  SUBCASE("entries depend on y only (x never enters the representation)") {
    CHECK(m.g[0][0].nvars() == m.r);
    CHECK(m.detg.nvars() == m.r);
  }
}

TEST_CASE("G matrix") {
  SUBCASE("product cubic: G = diag(y2^2 y3^2, ...) and det G = f^4") {
    MPoly f = product_cubic().polynomial();
    GMatrix gm = g_matrix(product_cubic());
    MPoly y1 = MPoly::variable(3, 0), y2 = MPoly::variable(3, 1),
          y3 = MPoly::variable(3, 2);
    CHECK(gm.G[0][0] == (y2 * y3).pow(2));
    CHECK(gm.G[1][1] == (y1 * y3).pow(2));
    CHECK(gm.G[2][2] == (y1 * y2).pow(2));
    CHECK(gm.G[0][1].is_zero());
    CHECK(gm.detG == f.pow(4));
  }
  SUBCASE("G = 4 f^2 g entrywise") {
    Rng rng(3);
    CubicForm f = random_integer_cubic(rng);
    MetricField m = amwp_metric(f);
    MPoly f2 = m.f * m.f;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(RatFn::make(m.gm.G[i][j], f2.scaled(BigRat(4))) == m.g[i][j]);
  }
  SUBCASE("B is the adjugate: G B = det G * I") {
    Rng rng(4);
    GMatrix gm = g_matrix(random_integer_cubic(rng));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        MPoly acc(3);
        for (int k = 0; k < 3; ++k) acc += gm.G[i][k] * gm.B[k][j];
        CHECK(acc == (i == j ? gm.detG : MPoly(3)));
      }
  }
}

TEST_CASE("positive definiteness inside the index cone") {
  MetricField m = amwp_metric(stu());
  CHECK(metric_positive_at(m, {BigRat(1), BigRat(1), BigRat(1)}));
  MetricField mp = amwp_metric(product_cubic());
  CHECK(metric_positive_at(mp, {BigRat(1), BigRat(2), BigRat(3)}));
  // 100 random rational points of the STU cone
  Rng rng(77);
  int done = 0;
  while (done < 100) {
    std::vector<BigRat> y = {rng.positive_rational(12, 5),
                             rng.positive_rational(12, 5),
                             rng.positive_rational(12, 5)};
    if (!index_cone_contains(stu(), y)) continue;
    CHECK(metric_positive_at(m, y));
    ++done;
  }
  CHECK_THROWS_AS(metric_positive_at(m, {BigRat(0), BigRat(0), BigRat(0)}),
                  std::domain_error);
}

TEST_CASE("slice curvature formula") {
  std::vector<BigRat> ones = {BigRat(1), BigRat(1), BigRat(1)};
  SUBCASE("STU value at (1,1,1): -9/4 + f^2/(4 h^2) with f=38, h=10") {
    CHECK(slice_curvature_formula(stu(), ones) == BigRat(34, 25));
  }
  SUBCASE("ray invariance, exact") {
    std::vector<BigRat> twice = {BigRat(2), BigRat(2), BigRat(2)};
    CHECK(slice_curvature_formula(stu(), ones) ==
          slice_curvature_formula(stu(), twice));
    std::vector<BigRat> y = {BigRat(3, 2), BigRat(1, 3), BigRat(2)};
    std::vector<BigRat> ly = {BigRat(21, 10) * y[0], BigRat(21, 10) * y[1],
                              BigRat(21, 10) * y[2]};
    CHECK(slice_curvature_formula(stu(), y) ==
          slice_curvature_formula(stu(), ly));
  }
  SUBCASE("type II family value is exactly -9/4") {
    CubicForm f = type2_family(BigRat(-1), BigRat(0), BigRat(-1));
    CHECK(slice_curvature_formula(f, {BigRat(3), BigRat(2), BigRat(1)}) ==
          BigRat(-9, 4));
  }
  SUBCASE("points outside the index cone are rejected") {
    CHECK_THROWS_AS(
        slice_curvature_formula(stu(), {BigRat(-1), BigRat(1), BigRat(1)}),
        std::invalid_argument);
  }
}

TEST_CASE("slice curvature numeric oracle agrees with the formula") {
  std::vector<BigRat> ones = {BigRat(1), BigRat(1), BigRat(1)};
  SUBCASE("STU") {
    double numeric = slice_curvature_numeric(stu(), ones);
    CHECK(std::fabs(numeric - 34.0 / 25.0) < 1e-4);
  }
  SUBCASE("diagonal cubic") {
    // The all-ones point is not in this cubic's index cone (its Hessian is
    // positive definite there); (2,-1,-1) is.
    std::map<Exponents, BigRat> mono;
    mono[{3u, 0u, 0u}] = BigRat(1);
    mono[{0u, 3u, 0u}] = BigRat(1);
    mono[{0u, 0u, 3u}] = BigRat(1);
    CubicForm diag = CubicForm::from_monomials(3, mono);
    std::vector<BigRat> p = {BigRat(2), BigRat(-1), BigRat(-1)};
    REQUIRE(index_cone_contains(diag, p));
    BigRat formula = slice_curvature_formula(diag, p);
    CHECK(formula == BigRat(-9, 4));  // the Fermat cubic has S = 0
    double numeric = slice_curvature_numeric(diag, p);
    CHECK(std::fabs(numeric - formula.to_double()) < 1e-4);
  }
  SUBCASE("type II family is -9/4 numerically") {
    CubicForm f = type2_family(BigRat(-1), BigRat(0), BigRat(-1));
    double numeric =
        slice_curvature_numeric(f, {BigRat(3), BigRat(2), BigRat(1)});
    CHECK(std::fabs(numeric + 2.25) < 1e-4);
  }
}

TEST_CASE("radial planes are numerically flat") {
  std::vector<BigRat> ones = {BigRat(1), BigRat(1), BigRat(1)};
  CHECK(radial_flatness_check(stu(), ones) <= 1e-6);
  CHECK(radial_flatness_check(product_cubic(), ones) <= 1e-6);
  std::vector<BigRat> other = {BigRat(2), BigRat(1), BigRat(3, 2)};
  CHECK(radial_flatness_check(stu(), other) <= 1e-6);
}

TEST_CASE("slice-tangent planes reproduce the level-set curvature") {
  // In the product picture the cone metric restricted to a plane tangent to
  // the level set has sectional curvature (2/3) R_slice: the cone metric is
  // 1/4 of the Hessian metric and the slice metric here is 1/6 of the
  // centro-affine one, so the scalings combine to 4/6.
  CubicForm f = stu();
  MetricField m = amwp_metric(f);
  std::vector<BigRat> y = {BigRat(1), BigRat(1), BigRat(1)};
  // Two independent directions annihilated by df at y.
  MPoly poly = f.polynomial();
  std::vector<double> grad(3);
  for (int i = 0; i < 3; ++i)
    grad[i] = poly.derivative(i).evaluate(y).to_double();
  std::vector<double> u = {grad[1], -grad[0], 0.0};
  std::vector<double> v = {grad[2], 0.0, -grad[0]};
  double k = sectional_curvature_numeric(m, y, u, v);
  double expected = (2.0 / 3.0) * slice_curvature_formula(f, y).to_double();
  CHECK(std::fabs(k - expected) < 1e-5 * std::max(1.0, std::fabs(expected)));
  // Sanity: generic non-radial planes are not flat.
  CHECK(std::fabs(k) > 1e-3);
}
