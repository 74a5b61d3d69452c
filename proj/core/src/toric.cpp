#include "amwp/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace amwp {

namespace {

// Barycentric solve against the 5x5 system [v_i; 1] lambda = [u; 1].
std::vector<BigRat> barycentric_impl(const std::vector<LatticePoint>& verts,
                                     const std::vector<BigRat>& u) {
  const int n = LatticeSimplex::kDim;
  Mat<BigRat> M = make_mat<BigRat>(n + 1, BigRat(0));
  std::vector<BigRat> rhs(n + 1, BigRat(0));
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col <= n; ++col) M[row][col] = BigRat(verts[col][row]);
    rhs[row] = u[row];
  }
  for (int col = 0; col <= n; ++col) M[n][col] = BigRat(1);
  rhs[n] = BigRat(1);
  return solve(M, rhs);
}

}  // namespace

LatticeSimplex::LatticeSimplex(std::vector<LatticePoint> vertices)
    : verts_(std::move(vertices)) {
  if (verts_.size() != kDim + 1)
    throw std::invalid_argument("LatticeSimplex: need exactly 5 vertices");
  for (const auto& v : verts_)
    if (v.size() != kDim)
      throw std::invalid_argument("LatticeSimplex: vertices must be 4-vectors");
  std::sort(verts_.begin(), verts_.end());

  // Affine independence: the difference matrix has full rank.
  Mat<BigRat> diff = make_mat<BigRat>(kDim, BigRat(0));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      diff[i][j] = BigRat(verts_[i][j] - verts_[kDim][j]);
  if (det(diff).is_zero())
    throw std::invalid_argument("LatticeSimplex: vertices affinely dependent");
}

bool origin_interior(const LatticeSimplex& P) {
  std::vector<BigRat> origin(LatticeSimplex::kDim, BigRat(0));
  for (const BigRat& l : barycentric_impl(P.vertices(), origin))
    if (l.sign() <= 0) return false;
  return true;
}

LatticeSimplex polar_dual(const LatticeSimplex& P) {
  const int n = LatticeSimplex::kDim;
  if (!origin_interior(P))
    throw std::domain_error("polar_dual: origin not interior");
  const auto& verts = P.vertices();
  std::vector<LatticePoint> dual;
  for (int omit = 0; omit <= n; ++omit) {
    Mat<BigRat> M;
    for (int i = 0; i <= n; ++i) {
      if (i == omit) continue;
      std::vector<BigRat> row(n);
      for (int j = 0; j < n; ++j) row[j] = BigRat(verts[i][j]);
      M.push_back(std::move(row));
    }
    std::vector<BigRat> rhs(n, BigRat(-1));
    std::vector<BigRat> u = solve(M, rhs);
    LatticePoint ui(n);
    for (int j = 0; j < n; ++j) {
      if (!u[j].is_integer())
        throw std::domain_error("polar_dual: non-integral dual vertex (not reflexive)");
      ui[j] = static_cast<long>(u[j].numerator().get_si());
    }
    dual.push_back(std::move(ui));
  }
  return LatticeSimplex(std::move(dual));
}

std::vector<LatticePoint> lattice_points(const LatticeSimplex& P) {
  const int n = LatticeSimplex::kDim;
  const auto& verts = P.vertices();
  LatticePoint lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = hi[j] = verts[0][j];
    for (const auto& v : verts) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  std::vector<LatticePoint> out;
  LatticePoint p(n);
  std::vector<BigRat> u(n);
  std::function<void(int)> scan = [&](int coord) {
    if (coord == n) {
      for (int j = 0; j < n; ++j) u[j] = BigRat(p[j]);
      for (const BigRat& l : barycentric_impl(verts, u))
        if (l.sign() < 0) return;
      out.push_back(p);
      return;
    }
    for (long v = lo[coord]; v <= hi[coord]; ++v) {
      p[coord] = v;
      scan(coord + 1);
    }
  };
  scan(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigRat> barycentric(const LatticeSimplex& P,
                                const std::vector<BigRat>& u) {
  if (u.size() != LatticeSimplex::kDim)
    throw std::invalid_argument("barycentric: point must be a 4-vector");
  return barycentric_impl(P.vertices(), u);
}

FaceInfo face_interiority(const LatticeSimplex& P, const std::vector<BigRat>& u) {
  std::vector<BigRat> lambda = barycentric(P, u);
  FaceInfo info;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() < 0)
      throw std::domain_error("face_interiority: point outside the simplex");
    if (lambda[i].sign() > 0) info.support.push_back(static_cast<int>(i));
  }
  // For a simplex, a point with support S is interior to the face conv(S).
  info.interior = true;
  info.codimension =
      LatticeSimplex::kDim - (static_cast<int>(info.support.size()) - 1);
  return info;
}

long segment_interior_points(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("segment_interior_points: dimension mismatch");
  if (a == b) throw std::invalid_argument("segment_interior_points: degenerate segment");
  long g = 0;
  for (std::size_t c = 0; c < a.size(); ++c) g = std::gcd(g, std::labs(a[c] - b[c]));
  return g - 1;
}

long edge_interior_points(const LatticeSimplex& P, int i, int j) {
  if (i == j) throw std::invalid_argument("edge_interior_points: i == j");
  const auto& verts = P.vertices();
  if (i < 0 || j < 0 || i > LatticeSimplex::kDim || j > LatticeSimplex::kDim)
    throw std::out_of_range("edge_interior_points: vertex index out of range");
  return segment_interior_points(verts[i], verts[j]);
}

}  // namespace amwp
