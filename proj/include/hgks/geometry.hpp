#pragma once

/// @file geometry.hpp
/// @brief Quadrature geometry derived from the mesh: trilinear cell volumes,
///        centroids and 2x2x2 Gauss nodes, plus bilinear face quadrature with
///        orthonormal frames. Face normals carry their exact quadratic time
///        dependence when vertices move linearly within a step.

#include <array>
#include <vector>

#include "hgks/mesh.hpp"

namespace hgks {

struct GaussNode {
  Vec3 x;
  double w = 0.0;  // physical weight (reference weight times |J|)
};

struct CellGeom {
  double vol = 0.0, h = 0.0;  // h = vol^(1/3)
  Vec3 cen;
  std::array<GaussNode, 8> node;
};

struct FaceGaussPoint {
  Vec3 x;              // physical position
  Vec3 N;              // unnormalized normal (X_s cross X_t)
  Vec3 N1, N2;         // N(t) = N + N1*dt + N2*dt^2 under the current vertex velocities
  double area = 0.0;   // |N|
  Vec3 nx, ny, nz;     // right-handed orthonormal frame, nx = N/|N|
  Vec3 ug;             // grid velocity at the point
};

struct FaceQuad {
  std::array<FaceGaussPoint, 4> gp;  // equal reference weights of 1/4
};

/// Geometry of one trilinear cell from its 8 corner vertices.
CellGeom cell_geometry(const std::array<Vec3, 8>& corners);

/// Face quadrature. dir selects the normal axis; the face with index fi along
/// dir separates cells fi-1 and fi. The normal points toward increasing index.
FaceQuad face_quadrature(const StructuredMesh& m, int dir, int fi, int fj, int fk);

/// Cached cell geometry over the full extended range (interior + both ghost
/// layers). Uniform meshes share a single shape-relative entry.
class GeometryCache {
 public:
  void build(const StructuredMesh& m);

  bool uniform() const { return uniform_; }
  double vol(int i, int j, int k) const { return uniform_ ? shared_.vol : at(i, j, k).vol; }
  double h(int i, int j, int k) const { return uniform_ ? shared_.h : at(i, j, k).h; }
  Vec3 centroid(int i, int j, int k) const;
  /// Quadrature nodes of a cell; for uniform meshes they are synthesized from
  /// the shared shape and the cell centroid.
  CellGeom cell(int i, int j, int k) const;

 private:
  const CellGeom& at(int i, int j, int k) const { return cells_[m_->cid(i, j, k)]; }
  const StructuredMesh* m_ = nullptr;
  bool uniform_ = false;
  CellGeom shared_;  // centroid at origin when uniform
  std::vector<CellGeom> cells_;
};

/// 5-point Gauss-Legendre rule on [-1/2, 1/2] used for initialization.
struct GaussRule1D {
  std::array<double, 5> x, w;
};
GaussRule1D init_rule();

/// Cell average of a pointwise field by tensor 5x5x5 quadrature.
template <class F>
State5 cell_average(const StructuredMesh& m, int i, int j, int k, F&& field) {
  const GaussRule1D r = init_rule();
  const auto ids = m.cell_corners(i, j, k);
  std::array<Vec3, 8> c;
  for (int b = 0; b < 8; ++b) c[b] = m.pos[ids[b]];
  State5 acc{0, 0, 0, 0, 0};
  double vol = 0.0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int g = 0; g < 5; ++g) {
        const double xi = r.x[a], eta = r.x[b], zta = r.x[g];
        // trilinear shape functions and Jacobian
        Vec3 X{}, Xi{}, Xe{}, Xz{};
        for (int v = 0; v < 8; ++v) {
          const double sx = (v & 4) ? 1.0 : -1.0;
          const double sy = (v & 2) ? 1.0 : -1.0;
          const double sz = (v & 1) ? 1.0 : -1.0;
          const double fx = 0.5 + sx * xi, fy = 0.5 + sy * eta, fz = 0.5 + sz * zta;
          X += c[v] * (fx * fy * fz);
          Xi += c[v] * (sx * fy * fz);
          Xe += c[v] * (fx * sy * fz);
          Xz += c[v] * (fx * fy * sz);
        }
        const double det = Xi.dot(Xe.cross(Xz));
        const double wgt = r.w[a] * r.w[b] * r.w[g] * det;
        const State5 f = field(X);
        for (int q = 0; q < 5; ++q) acc[q] += wgt * f[q];
        vol += wgt;
      }
  for (int q = 0; q < 5; ++q) acc[q] /= vol;
  return acc;
}

}  // namespace hgks
