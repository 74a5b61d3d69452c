#ifndef AMWP_CATALOG_HPP
#define AMWP_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "amwp/cubic_form.hpp"
#include "amwp/toric.hpp"

namespace amwp {

/// Cubic living in a ring with trailing parameter variables (e.g. the
/// Weierstrass family in y1, y2, y3, lambda, mu).
struct ParametricCubic {
  MPoly f;
  int r = 0;
  std::vector<std::string> var_names;
};

/// One catalog record: a named cubic form, parametric family or polytope,
/// with its known data (Kaehler cone inequalities, expected invariants).
struct CatalogEntry {
  std::string name;
  std::optional<CubicForm> cubic;
  std::optional<ParametricCubic> family;
  std::optional<LatticeSimplex> polytope;
  std::vector<std::vector<BigRat>> kahler_cone;  // rows c: sum c_i y_i >= 0
  std::optional<Mat<BigRat>> basis_change;       // to the J-basis, when stored
  std::optional<BigRat> expected_s;
  std::optional<int> type2_wall;  // variable index whose wall kills the Hessian
  std::string notes;
};

/// Names in listing order.
const std::vector<std::string>& catalog_names();

/// Lookup; also accepts instantiations "weierstrass(l,m)" and
/// "type2(a,b,c)" with rational arguments.  Throws std::invalid_argument
/// for unknown names.
CatalogEntry catalog_get(const std::string& name);

}  // namespace amwp

#endif  // AMWP_CATALOG_HPP
