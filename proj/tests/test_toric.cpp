#include <doctest.h>

#include <algorithm>

#include "amwp/catalog.hpp"
#include "amwp/toric.hpp"

using namespace amwp;

namespace {

LatticeSimplex delta() { return catalog_get("delta_P11128").polytope.value(); }
LatticeSimplex delta_polar() {
  return catalog_get("delta_P11128_polar").polytope.value();
}

std::vector<BigRat> rational_point(const LatticePoint& p) {
  std::vector<BigRat> out;
  for (long c : p) out.push_back(BigRat(c));
  return out;
}

}  // namespace

TEST_CASE("polar dual of the weighted-projective simplex") {
  LatticeSimplex dual = polar_dual(delta());
  CHECK(dual == delta_polar());
  // Explicit vertex set (sorted order).
  std::vector<LatticePoint> expected = {{-12, -8, -2, -1},
                                        {0, 0, 0, 1},
                                        {0, 0, 1, 0},
                                        {0, 1, 0, 0},
                                        {1, 0, 0, 0}};
  CHECK(dual.vertices() == expected);
}

TEST_CASE("reflexivity is an involution") {
  CHECK(polar_dual(polar_dual(delta())) == delta());
  CHECK(polar_dual(polar_dual(delta_polar())) == delta_polar());

  LatticeSimplex standard({{1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {0, 0, 0, 1},
                           {-1, -1, -1, -1}});
  LatticeSimplex dual = polar_dual(standard);
  CHECK(polar_dual(dual) == standard);
  std::vector<LatticePoint> expected = {{-1, -1, -1, -1},
                                        {-1, -1, -1, 4},
                                        {-1, -1, 4, -1},
                                        {-1, 4, -1, -1},
                                        {4, -1, -1, -1}};
  CHECK(dual.vertices() == expected);
}

TEST_CASE("non-reflexive input is reported") {
  LatticeSimplex doubled({{2, 0, 0, 0},
                          {0, 2, 0, 0},
                          {0, 0, 2, 0},
                          {0, 0, 0, 2},
                          {-1, -1, -1, -1}});
  CHECK(origin_interior(doubled));
  CHECK_THROWS_AS(polar_dual(doubled), std::domain_error);

  // Origin on the boundary: polar duality is rejected outright.
  LatticeSimplex unit({{0, 0, 0, 0},
                       {1, 0, 0, 0},
                       {0, 1, 0, 0},
                       {0, 0, 1, 0},
                       {0, 0, 0, 1}});
  CHECK_FALSE(origin_interior(unit));
  CHECK_THROWS_AS(polar_dual(unit), std::domain_error);
}

TEST_CASE("degenerate vertex sets are rejected by the type invariant") {
  CHECK_THROWS_AS(LatticeSimplex({{0, 0, 0, 0},
                                  {1, 0, 0, 0},
                                  {2, 0, 0, 0},
                                  {0, 0, 1, 0},
                                  {0, 0, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticeSimplex({{1, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("lattice points of the polar polytope: exactly the 11 known ones") {
  auto pts = lattice_points(delta_polar());
  std::vector<LatticePoint> expected = {
      {-12, -8, -2, -1}, {-6, -4, -1, 0}, {-3, -2, 0, 0}, {-2, -1, 0, 0},
      {-1, -1, 0, 0},    {-1, 0, 0, 0},   {0, 0, 0, 0},   {0, 0, 0, 1},
      {0, 0, 1, 0},      {0, 1, 0, 0},    {1, 0, 0, 0}};
  std::sort(expected.begin(), expected.end());
  CHECK(pts == expected);
  CHECK(pts.size() == 11);
}

TEST_CASE("unit simplex has its vertices as the only lattice points") {
  LatticeSimplex unit({{0, 0, 0, 0},
                       {1, 0, 0, 0},
                       {0, 1, 0, 0},
                       {0, 0, 1, 0},
                       {0, 0, 0, 1}});
  CHECK(lattice_points(unit).size() == 5);
}

// Sorted vertex order of the polar polytope:
//   0: (-12,-8,-2,-1)   1: (0,0,0,1)   2: (0,0,1,0)   3: (0,1,0,0)
//   4: (1,0,0,0)
TEST_CASE("barycentric coordinates of the extra lattice points") {
  LatticeSimplex dp = delta_polar();
  auto bary = [&](std::initializer_list<long> p) {
    return barycentric(dp, rational_point(LatticePoint(p)));
  };
  CHECK(bary({-3, -2, 0, 0}) ==
        std::vector<BigRat>{BigRat(1, 4), BigRat(1, 4), BigRat(1, 2),
                            BigRat(0), BigRat(0)});
  CHECK(bary({-6, -4, -1, 0}) ==
        std::vector<BigRat>{BigRat(1, 2), BigRat(1, 2), BigRat(0), BigRat(0),
                            BigRat(0)});
  CHECK(bary({-1, -1, 0, 0}) ==
        std::vector<BigRat>{BigRat(1, 8), BigRat(1, 8), BigRat(1, 4),
                            BigRat(0), BigRat(1, 2)});
  CHECK(bary({-2, -1, 0, 0}) ==
        std::vector<BigRat>{BigRat(1, 6), BigRat(1, 6), BigRat(1, 3),
                            BigRat(1, 3), BigRat(0)});
  CHECK(bary({-1, 0, 0, 0}) ==
        std::vector<BigRat>{BigRat(1, 12), BigRat(1, 12), BigRat(1, 6),
                            BigRat(2, 3), BigRat(0)});
}

TEST_CASE("face classification of the extra lattice points") {
  LatticeSimplex dp = delta_polar();
  SUBCASE("(-3,-2,0,0) is interior to a codimension-2 face") {
    FaceInfo info = face_interiority(dp, rational_point({-3, -2, 0, 0}));
    CHECK(info.support == std::vector<int>{0, 1, 2});
    CHECK(info.codimension == 2);
    CHECK(info.interior);
  }
  SUBCASE("(-1,0,0,0) lies in a codimension-1 face") {
    FaceInfo info = face_interiority(dp, rational_point({-1, 0, 0, 0}));
    CHECK(info.codimension == 1);
    CHECK(info.support == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("(-1,-1,0,0) and (-2,-1,0,0) also sit in codimension-1 faces") {
    CHECK(face_interiority(dp, rational_point({-1, -1, 0, 0})).codimension == 1);
    CHECK(face_interiority(dp, rational_point({-2, -1, 0, 0})).codimension == 1);
  }
  SUBCASE("a vertex is a codimension-4 face of itself") {
    FaceInfo info = face_interiority(dp, rational_point({1, 0, 0, 0}));
    CHECK(info.codimension == 4);
    CHECK(info.support == std::vector<int>{4});
  }
  SUBCASE("points outside are rejected") {
    CHECK_THROWS_AS(face_interiority(dp, rational_point({5, 5, 5, 5})),
                    std::domain_error);
  }
}

TEST_CASE("edge lattice counts") {
  // Sorted order of the primal simplex:
  //   0: (-1,-1,-1,-1)  1: (-1,-1,-1,23)  2: (-1,-1,11,-1)
  //   3: (-1,2,-1,-1)   4: (1,-1,-1,-1)
  LatticeSimplex d = delta();
  // The edge dual to the codimension-2 point: between (1,-1,-1,-1) and
  // (-1,2,-1,-1); difference (2,-3,0,0) has gcd 1.
  CHECK(edge_interior_points(d, 4, 3) == 0);
  CHECK(edge_interior_points(d, 0, 1) == 23);  // difference (0,0,0,24)
  CHECK_THROWS_AS(edge_interior_points(d, 2, 2), std::invalid_argument);

  CHECK(segment_interior_points({0, 0, 0, 0}, {2, 0, 0, 0}) == 1);
  CHECK(segment_interior_points({0, 0, 0, 0}, {3, 3, 0, 0}) == 2);
}
