#include <doctest.h>

#include "amwp/catalog.hpp"
#include "amwp/identities.hpp"

using namespace amwp;

TEST_CASE("STU entry") {
  CatalogEntry e = catalog_get("STU");
  REQUIRE(e.cubic.has_value());
  MPoly f = e.cubic->polynomial();
  MPoly expected(3);
  expected.add_term({3, 0, 0}, BigRat(8));
  expected.add_term({2, 0, 1}, BigRat(12));
  expected.add_term({2, 1, 0}, BigRat(6));
  expected.add_term({1, 0, 2}, BigRat(6));
  expected.add_term({1, 1, 1}, BigRat(6));
  CHECK(f == expected);
  CHECK(e.kahler_cone.size() == 3);
  REQUIRE(e.expected_s.has_value());
  CHECK(*e.expected_s == BigRat(1));
}

TEST_CASE("intersection-basis entry transforms to the J-basis form") {
  CatalogEntry edl = catalog_get("STU_EDL");
  REQUIRE(edl.cubic.has_value());
  REQUIRE(edl.basis_change.has_value());
  CubicForm in_j = edl.cubic->change_of_variables(*edl.basis_change);
  CHECK(in_j.polynomial() == catalog_get("STU").cubic->polynomial());
  // J1^3 = 8 directly
  CHECK(in_j.a(0, 0, 0) == BigRat(8));
}

TEST_CASE("every expected S-invariant matches the computed one") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_get(name);
    if (!e.expected_s || !e.cubic) continue;
    CHECK(s_invariant(*e.cubic) == *e.expected_s);
  }
  CHECK(s_invariant(catalog_get("V12_11136").cubic.value()) == BigRat(0));
}

TEST_CASE("V12 entry records the homogenization") {
  CatalogEntry e = catalog_get("V12_11136");
  CHECK(e.notes.find("9*y3^3") != std::string::npos);
  // stored cubic is homogeneous of degree 3 by construction
  MPoly poly = e.cubic->polynomial();
  for (const auto& [m, c] : poly.terms()) CHECK(total_degree(m) == 3);
}

TEST_CASE("parametric instantiations") {
  CatalogEntry w = catalog_get("weierstrass(0,1)");
  REQUIRE(w.cubic.has_value());
  MPoly expected(3);
  expected.add_term({0, 2, 1}, BigRat(1));
  expected.add_term({3, 0, 0}, BigRat(-1));
  expected.add_term({0, 0, 3}, BigRat(-1));
  CHECK(w.cubic->polynomial() == expected);

  CatalogEntry t = catalog_get("type2(1,2,3)");
  REQUIRE(t.cubic.has_value());
  CHECK(t.cubic->polynomial() ==
        type2_family(BigRat(1), BigRat(2), BigRat(3)).polynomial());

  CatalogEntry family = catalog_get("weierstrass");
  REQUIRE(family.family.has_value());
  CHECK(family.family->r == 3);
  CHECK(family.family->f.nvars() == 5);
}

TEST_CASE("polytope entries and unknown names") {
  CHECK(catalog_get("delta_P11128").polytope.has_value());
  CHECK(catalog_get("delta_P11128_polar").polytope.has_value());
  CHECK_THROWS_AS(catalog_get("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("weierstrass(1)"), std::invalid_argument);
}

TEST_CASE("type II wall data is consistent") {
  CatalogEntry v16 = catalog_get("V16_11158");
  REQUIRE(v16.type2_wall.has_value());
  int wall = *v16.type2_wall;
  MPoly H = hessian_data(*v16.cubic).H;
  std::vector<MPoly> images;
  for (int i = 0; i < 3; ++i)
    images.push_back(i == wall ? MPoly::zero(3) : MPoly::variable(3, i));
  CHECK(H.substitute(images).is_zero());
}
