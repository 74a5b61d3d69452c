#include <doctest.h>

#include "amwp/catalog.hpp"
#include "amwp/identities.hpp"
#include "amwp/verify.hpp"

using namespace amwp;

namespace {

CubicForm stu() { return catalog_get("STU").cubic.value(); }

}  // namespace

TEST_CASE("det G = (1/2) f^3 H") {
  SUBCASE("product cubic: det G = f^4 and H = 2 f") {
    CubicForm prod = CubicForm::from_intersection(3, {{{0, 1, 2}, BigRat(1, 6)}});
    GMatrix gm = g_matrix(prod);
    CHECK(gm.detG == prod.polynomial().pow(4));
    CHECK(det_g_factorization_holds(prod));
  }
  SUBCASE("Weierstrass family, symbolic lambda and mu") {
    ParametricCubic wf = catalog_get("weierstrass").family.value();
    CHECK(det_g_factorization_holds(wf.f, wf.r));
  }
  SUBCASE("random integer cubics") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i)
      CHECK(det_g_factorization_holds(random_integer_cubic(rng)));
  }
}

TEST_CASE("C(i,j) slices are rank <= 1 and positive semi-definite") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    CubicForm f = random_integer_cubic(rng);
    int i = static_cast<int>(rng.int_in(0, 2));
    int j = static_cast<int>(rng.int_in(0, 2));
    Mat<BigRat> c = c_tensor_slice(f, i, j);
    for (int p = 0; p < 3; ++p) {
      CHECK(c[p][p] >= BigRat(0));
      for (int q = 0; q < 3; ++q) {
        CHECK(c[p][q] == c[q][p]);
        // all 2x2 minors vanish
        for (int p2 = p + 1; p2 < 3; ++p2)
          for (int q2 = q + 1; q2 < 3; ++q2)
            CHECK((c[p][q] * c[p2][q2] - c[p][q2] * c[p2][q]).is_zero());
      }
    }
  }
}

TEST_CASE("trace term vanishes when no y_i^2-type monomials exist") {
  CubicForm prod = CubicForm::from_intersection(3, {{{0, 1, 2}, BigRat(1, 6)}});
  CHECK(trace_term(prod, 0, 0).is_zero());
}

TEST_CASE("type II trace factorization") {
  SUBCASE("known instances give the frozen constant") {
    Type2TraceResult a = type2_trace_constant(BigRat(0), BigRat(0), BigRat(1));
    CHECK(a.ok);
    CHECK(a.constant == type2_trace_expected());
    Type2TraceResult b = type2_trace_constant(BigRat(1), BigRat(1), BigRat(1));
    CHECK(b.ok);
    CHECK(b.constant == type2_trace_expected());
  }
  SUBCASE("20 random admissible triples share the constant") {
    Rng rng(19);
    for (int i = 0; i < 20; ++i) {
      BigRat a(rng.int_in(-9, 9)), b(rng.int_in(-9, 9)), c(rng.int_in(-9, 9));
      if (b.is_zero() && c.is_zero()) b = BigRat(1);
      Type2TraceResult t = type2_trace_constant(a, b, c);
      CHECK(t.ok);
      CHECK(t.constant == type2_trace_expected());
    }
  }
  SUBCASE("b = c = 0 is rejected") {
    CHECK_THROWS_AS(type2_trace_constant(BigRat(5), BigRat(0), BigRat(0)),
                    std::invalid_argument);
  }
}

TEST_CASE("blow-up scans") {
  SUBCASE("STU along (s^2, s, s): strictly increasing, positive at the end") {
    std::vector<MPoly> path = {MPoly::monomial({2}, BigRat(1)),
                               MPoly::monomial({1}, BigRat(1)),
                               MPoly::monomial({1}, BigRat(1))};
    auto rows = blow_up_scan(stu(), path,
                             {BigRat(10), BigRat(100), BigRat(1000)});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
      CHECK(r.in_index_cone);
      REQUIRE(r.scalar.has_value());
    }
    CHECK(*rows[0].scalar < *rows[1].scalar);
    CHECK(*rows[1].scalar < *rows[2].scalar);
    CHECK(*rows[2].scalar > BigRat(0));
  }
  SUBCASE("STU along (s, 2s, 3s) is constant (identity in s)") {
    std::vector<MPoly> ray = {MPoly::monomial({1}, BigRat(1)),
                              MPoly::monomial({1}, BigRat(2)),
                              MPoly::monomial({1}, BigRat(3))};
    CHECK(scalar_constant_along_path(stu(), ray));
    auto rows = blow_up_scan(stu(), ray, {BigRat(2), BigRat(20)});
    CHECK(*rows[0].scalar == *rows[1].scalar);
  }
  SUBCASE("V16 along (1, eps, 1) grows as eps shrinks") {
    CubicForm v16 = catalog_get("V16_11158").cubic.value();
    std::vector<MPoly> path = {MPoly::constant(1, BigRat(1)),
                               MPoly::monomial({1}, BigRat(1)),
                               MPoly::constant(1, BigRat(1))};
    auto rows = blow_up_scan(
        v16, path, {BigRat(1, 10), BigRat(1, 100), BigRat(1, 1000)});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) REQUIRE(r.scalar.has_value());
    CHECK(*rows[0].scalar < *rows[1].scalar);
    CHECK(*rows[1].scalar < *rows[2].scalar);
  }
  SUBCASE("rows outside the index cone are flagged") {
    std::vector<MPoly> path = {MPoly::monomial({1}, BigRat(-1)),
                               MPoly::monomial({1}, BigRat(1)),
                               MPoly::monomial({1}, BigRat(1))};
    auto rows = blow_up_scan(stu(), path, {BigRat(1)});
    CHECK_FALSE(rows[0].in_index_cone);
  }
}
