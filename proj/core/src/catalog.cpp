#include "amwp/catalog.hpp"

#include <sstream>

#include "amwp/identities.hpp"

namespace amwp {

namespace {

CubicForm stu_cubic() {
  std::map<Exponents, BigRat> mono;
  mono[{3u, 0u, 0u}] = BigRat(8);
  mono[{2u, 0u, 1u}] = BigRat(12);
  mono[{2u, 1u, 0u}] = BigRat(6);
  mono[{1u, 0u, 2u}] = BigRat(6);
  mono[{1u, 1u, 1u}] = BigRat(6);
  return CubicForm::from_monomials(3, mono);
}

CubicForm v16_cubic() {
  std::map<Exponents, BigRat> mono;
  mono[{3u, 0u, 0u}] = BigRat(50);
  mono[{2u, 1u, 0u}] = BigRat(30);
  mono[{1u, 2u, 0u}] = BigRat(6);
  mono[{2u, 0u, 1u}] = BigRat(240);
  mono[{1u, 1u, 1u}] = BigRat(96);
  mono[{0u, 2u, 1u}] = BigRat(9);
  mono[{1u, 0u, 2u}] = BigRat(384);
  mono[{0u, 1u, 2u}] = BigRat(75);
  mono[{0u, 0u, 3u}] = BigRat(203);
  return CubicForm::from_monomials(3, mono);
}

CubicForm v12_cubic() {
  std::map<Exponents, BigRat> mono;
  mono[{3u, 0u, 0u}] = BigRat(18);
  mono[{2u, 1u, 0u}] = BigRat(18);
  mono[{2u, 0u, 1u}] = BigRat(54);
  mono[{1u, 2u, 0u}] = BigRat(6);
  mono[{1u, 1u, 1u}] = BigRat(36);
  mono[{1u, 0u, 2u}] = BigRat(54);
  mono[{0u, 2u, 1u}] = BigRat(3);
  mono[{0u, 1u, 2u}] = BigRat(9);
  mono[{0u, 0u, 3u}] = BigRat(9);  // homogenized final term, see notes
  return CubicForm::from_monomials(3, mono);
}

CubicForm weierstrass_cubic(const BigRat& lambda, const BigRat& mu) {
  std::map<Exponents, BigRat> mono;
  mono[{0u, 2u, 1u}] = BigRat(1);
  mono[{3u, 0u, 0u}] = BigRat(-1);
  if (!lambda.is_zero()) mono[{1u, 0u, 2u}] = -lambda;
  if (!mu.is_zero()) mono[{0u, 0u, 3u}] = -mu;
  return CubicForm::from_monomials(3, mono);
}

ParametricCubic weierstrass_family() {
  // Ring Q[y1, y2, y3, lambda, mu]; cubic in the first three variables.
  ParametricCubic fam;
  fam.r = 3;
  fam.var_names = {"y1", "y2", "y3", "lambda", "mu"};
  MPoly f(5);
  f.add_term({0, 2, 1, 0, 0}, BigRat(1));
  f.add_term({3, 0, 0, 0, 0}, BigRat(-1));
  f.add_term({1, 0, 2, 1, 0}, BigRat(-1));
  f.add_term({0, 0, 3, 0, 1}, BigRat(-1));
  fam.f = f;
  return fam;
}

ParametricCubic type2_symbolic_family() {
  // Ring Q[y1, y2, y3, a, b, c].
  ParametricCubic fam;
  fam.r = 3;
  fam.var_names = {"y1", "y2", "y3", "a", "b", "c"};
  MPoly f(6);
  f.add_term({3, 0, 0, 0, 0, 0}, BigRat(1));
  f.add_term({0, 3, 0, 1, 0, 0}, BigRat(1));
  f.add_term({0, 2, 1, 0, 1, 0}, BigRat(3));
  f.add_term({0, 1, 2, 0, 0, 1}, BigRat(3));
  fam.f = f;
  return fam;
}

LatticeSimplex delta_simplex() {
  return LatticeSimplex({{1, -1, -1, -1},
                         {-1, 2, -1, -1},
                         {-1, -1, 11, -1},
                         {-1, -1, -1, 23},
                         {-1, -1, -1, -1}});
}

LatticeSimplex delta_polar_simplex() {
  return LatticeSimplex({{1, 0, 0, 0},
                         {0, 1, 0, 0},
                         {0, 0, 1, 0},
                         {0, 0, 0, 1},
                         {-12, -8, -2, -1}});
}

std::vector<std::vector<BigRat>> simplicial_cone(int r) {
  std::vector<std::vector<BigRat>> rows;
  for (int i = 0; i < r; ++i) {
    std::vector<BigRat> row(r, BigRat(0));
    row[i] = BigRat(1);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Parses "name(a,b,...)" into name + rational arguments.
bool parse_call(const std::string& s, std::string& name,
                std::vector<BigRat>& args) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return false;
  name = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) args.push_back(BigRat::from_string(tok));
  return true;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "STU",         "STU_EDL",  "V16_11158", "V12_11136",
      "weierstrass", "type2",    "delta_P11128", "delta_P11128_polar"};
  return names;
}

CatalogEntry catalog_get(const std::string& request) {
  std::string name = request;
  std::vector<BigRat> args;
  if (request.find('(') != std::string::npos) {
    if (!parse_call(request, name, args))
      throw std::invalid_argument("catalog: cannot parse '" + request + "'");
  }

  CatalogEntry e;
  e.name = request;
  if (name == "STU") {
    e.cubic = stu_cubic();
    e.kahler_cone = simplicial_cone(3);
    e.expected_s = BigRat(1);
    e.notes =
        "Weierstrass elliptic fibration over F2; resolution of a degree-24 "
        "hypersurface in P(1,1,2,8,12).  Kaehler cone y1, y2, y3 >= 0 in the "
        "J-basis; S-invariant 1.";
  } else if (name == "STU_EDL") {
    e.cubic = CubicForm::from_intersection(
        3, {{{0, 0, 0}, BigRat(8)},
            {{0, 0, 2}, BigRat(-2)},
            {{0, 1, 1}, BigRat(-2)},
            {{0, 1, 2}, BigRat(1)}});
    // E = y1', D = 2 y1' + y3', L = 4 y1' + y2' + 2 y3' under J1 = E + 2D + 4L,
    // J2 = L, J3 = D + 2L.
    Mat<BigRat> A = make_mat<BigRat>(3, BigRat(0));
    A[0][0] = BigRat(1);
    A[1][0] = BigRat(2);
    A[1][2] = BigRat(1);
    A[2][0] = BigRat(4);
    A[2][1] = BigRat(1);
    A[2][2] = BigRat(2);
    e.basis_change = A;
    e.notes =
        "Same threefold as STU in the divisor basis (E, D, L): E^3 = 8, "
        "E^2 L = -2, E D^2 = -2, E D L = 1.  basis_change maps to the "
        "J-basis J1 = E + 2D + 4L, J2 = L, J3 = D + 2L.";
  } else if (name == "V16_11158") {
    e.cubic = v16_cubic();
    e.kahler_cone = simplicial_cone(3);
    e.expected_s = BigRat(0);
    e.type2_wall = 1;
    e.notes =
        "Resolution of a degree-16 hypersurface in P(1,1,1,5,8).  The "
        "Hessian determinant vanishes on the type II wall y2 = 0, so the "
        "S-invariant is zero.";
  } else if (name == "V12_11136") {
    e.cubic = v12_cubic();
    e.kahler_cone = simplicial_cone(3);
    e.expected_s = BigRat(0);
    e.type2_wall = 1;
    e.notes =
        "Resolution of a degree-12 hypersurface in P(1,1,1,3,6); type II "
        "wall at y2 = 0.  Tabulated sources print the last term as 9*y3^2, "
        "which cannot sit in a homogeneous cubic; stored here as 9*y3^3.";
  } else if (name == "weierstrass") {
    if (args.empty()) {
      e.family = weierstrass_family();
      e.notes =
          "Weierstrass canonical form y2^2 y3 - y1^3 - lambda y1 y3^2 - mu "
          "y3^3 with symbolic lambda, mu.  Instantiate as weierstrass(l,m).";
    } else if (args.size() == 2) {
      e.cubic = weierstrass_cubic(args[0], args[1]);
      e.notes = "Weierstrass canonical form at lambda = " + args[0].to_string() +
                ", mu = " + args[1].to_string() + ".";
    } else {
      throw std::invalid_argument("catalog: weierstrass takes 2 arguments");
    }
  } else if (name == "type2") {
    if (args.empty()) {
      e.family = type2_symbolic_family();
      e.expected_s = BigRat(0);
      e.notes =
          "Type II family y1^3 + y2 (a y2^2 + 3 b y2 y3 + 3 c y3^2) with "
          "symbolic a, b, c; S-invariant vanishes identically.  Instantiate "
          "as type2(a,b,c).";
    } else if (args.size() == 3) {
      e.cubic = type2_family(args[0], args[1], args[2]);
      e.expected_s = BigRat(0);
      e.type2_wall = 0;
      e.notes = "Type II family member; Hessian wall at y1 = 0.";
    } else {
      throw std::invalid_argument("catalog: type2 takes 3 arguments");
    }
  } else if (name == "delta_P11128") {
    e.polytope = delta_simplex();
    e.notes =
        "Simplex with P(Delta) = P(1,1,2,8,12); the polar dual is reflexive "
        "with 11 lattice points.";
  } else if (name == "delta_P11128_polar") {
    e.polytope = delta_polar_simplex();
    e.notes = "Polar dual of delta_P11128.";
  } else {
    throw std::invalid_argument("catalog: unknown entry '" + request + "'");
  }
  return e;
}

}  // namespace amwp
