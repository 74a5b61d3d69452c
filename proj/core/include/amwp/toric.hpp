#ifndef AMWP_TORIC_HPP
#define AMWP_TORIC_HPP

#include <vector>

#include "amwp/linalg.hpp"

namespace amwp {

using LatticePoint = std::vector<long>;

/// Four-dimensional lattice simplex: five affinely independent integer
/// vertices.  Vertices are kept sorted lexicographically, which is the
/// canonical order used everywhere.
class LatticeSimplex {
 public:
  static constexpr int kDim = 4;

  explicit LatticeSimplex(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return verts_; }

  friend bool operator==(const LatticeSimplex& a, const LatticeSimplex& b) {
    return a.verts_ == b.verts_;
  }

 private:
  std::vector<LatticePoint> verts_;
};

/// Whether the origin is strictly interior (precondition of polar duality).
bool origin_interior(const LatticeSimplex& P);

/// Polar dual { u : <u, v> >= -1 for all v in P }.  Each dual vertex solves
/// <u, v_i> = -1 over a 4-subset of vertices; throws std::domain_error when
/// the origin is not interior or a dual vertex is non-integral (the polytope
/// is not reflexive).
LatticeSimplex polar_dual(const LatticeSimplex& P);

/// All lattice points of P (facet inequalities over the vertex bounding
/// box), sorted lexicographically.
std::vector<LatticePoint> lattice_points(const LatticeSimplex& P);

/// The unique affine combination u = sum lambda_i v_i with sum lambda_i = 1.
std::vector<BigRat> barycentric(const LatticeSimplex& P,
                                const std::vector<BigRat>& u);

struct FaceInfo {
  std::vector<int> support;  // vertices with positive barycentric coordinate
  bool interior = false;     // u interior to the face the support spans
  int codimension = 0;
};

/// Face data for a point of P; throws std::domain_error when u lies outside.
FaceInfo face_interiority(const LatticeSimplex& P, const std::vector<BigRat>& u);

/// Lattice points strictly between two integer points: gcd of the
/// coordinate differences minus one.
long segment_interior_points(const LatticePoint& a, const LatticePoint& b);

/// Same count for the edge between vertices i and j of P.
long edge_interior_points(const LatticeSimplex& P, int i, int j);

}  // namespace amwp

#endif  // AMWP_TORIC_HPP
