#include "hgks/geometry.hpp"

#include <cmath>

namespace hgks {

namespace {
constexpr double kG = 0.28867513459481287;  // 1/(2*sqrt(3)), 2-pt Gauss abscissa
}

CellGeom cell_geometry(const std::array<Vec3, 8>& c) {
  CellGeom g;
  int n = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d, ++n) {
        const double xi = a ? kG : -kG, eta = b ? kG : -kG, zta = d ? kG : -kG;
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
        g.node[n].x = X;
        g.node[n].w = 0.125 * Xi.dot(Xe.cross(Xz));
      }
  Vec3 cen{};
  for (const auto& nd : g.node) {
    g.vol += nd.w;
    cen += nd.x * nd.w;
  }
  g.cen = cen * (1.0 / g.vol);
  g.h = std::cbrt(g.vol);
  return g;
}

FaceQuad face_quadrature(const StructuredMesh& m, int dir, int fi, int fj, int fk) {
  // Corner vertices of the face in the (s,t) parameter plane. Parameter pairs
  // are cyclic so that X_s x X_t points toward increasing cell index:
  // dir 0: (s,t)=(eta,zeta); dir 1: (zeta,xi); dir 2: (xi,eta).
  std::array<std::size_t, 4> v{};  // (s-,t-), (s+,t-), (s-,t+), (s+,t+)
  if (dir == 0) {
    v = {m.vid(fi, fj, fk), m.vid(fi, fj + 1, fk), m.vid(fi, fj, fk + 1),
         m.vid(fi, fj + 1, fk + 1)};
  } else if (dir == 1) {
    v = {m.vid(fi, fj, fk), m.vid(fi, fj, fk + 1), m.vid(fi + 1, fj, fk),
         m.vid(fi + 1, fj, fk + 1)};
  } else {
    v = {m.vid(fi, fj, fk), m.vid(fi + 1, fj, fk), m.vid(fi, fj + 1, fk),
         m.vid(fi + 1, fj + 1, fk)};
  }
  const Vec3 pmm = m.pos[v[0]], ppm = m.pos[v[1]], pmp = m.pos[v[2]], ppp = m.pos[v[3]];
  const Vec3 umm = m.vel[v[0]], upm = m.vel[v[1]], ump = m.vel[v[2]], upp = m.vel[v[3]];

  // X(s,t) = A + B s + C t + D st on [-1/2,1/2]^2, likewise for the velocity.
  const Vec3 A = (pmm + ppm + pmp + ppp) * 0.25;
  const Vec3 B = (ppm + ppp - pmm - pmp) * 0.5;
  const Vec3 C = (pmp + ppp - pmm - ppm) * 0.5;
  const Vec3 D = (ppp + pmm - ppm - pmp);
  const Vec3 Av = (umm + upm + ump + upp) * 0.25;
  const Vec3 Bv = (upm + upp - umm - ump) * 0.5;
  const Vec3 Cv = (ump + upp - umm - upm) * 0.5;
  const Vec3 Dv = (upp + umm - upm - ump);

  FaceQuad q;
  int n = 0;
  for (int it = 0; it < 2; ++it)
    for (int is = 0; is < 2; ++is, ++n) {
      const double s = is ? kG : -kG, t = it ? kG : -kG;
      FaceGaussPoint& g = q.gp[n];
      g.x = A + B * s + C * t + D * (s * t);
      g.ug = Av + Bv * s + Cv * t + Dv * (s * t);
      g.N = B.cross(C) + B.cross(D) * s + D.cross(C) * t;
      g.N1 = B.cross(Cv) + Bv.cross(C) + (B.cross(Dv) + Bv.cross(D)) * s +
             (D.cross(Cv) + Dv.cross(C)) * t;
      g.N2 = Bv.cross(Cv) + Bv.cross(Dv) * s + Dv.cross(Cv) * t;
      g.area = g.N.norm();
      g.nx = g.N * (1.0 / g.area);
      const Vec3 Xt = C + D * s;
      g.nz = Xt * (1.0 / Xt.norm());
      g.ny = g.nz.cross(g.nx);
    }
  return q;
}

void GeometryCache::build(const StructuredMesh& m) {
  m_ = &m;
  uniform_ = m.uniform && !m.moving;
  if (uniform_) {
    // One shape-relative entry: centroid at the origin.
    const Vec3 d = m.spacing();
    std::array<Vec3, 8> c;
    for (int b = 0; b < 8; ++b) {
      const double sx = (b & 4) ? 0.5 : -0.5;
      const double sy = (b & 2) ? 0.5 : -0.5;
      const double sz = (b & 1) ? 0.5 : -0.5;
      c[b] = {sx * d.x, sy * d.y, sz * d.z};
    }
    shared_ = cell_geometry(c);
    cells_.clear();
    return;
  }
  cells_.resize(m.num_cells());
  for (int i = -m.gw; i < m.nx + m.gw; ++i)
    for (int j = -m.gw; j < m.ny + m.gw; ++j)
      for (int k = -m.gw; k < m.nz + m.gw; ++k) {
        const auto ids = m.cell_corners(i, j, k);
        std::array<Vec3, 8> c;
        for (int b = 0; b < 8; ++b) c[b] = m.pos[ids[b]];
        cells_[m.cid(i, j, k)] = cell_geometry(c);
      }
}

Vec3 GeometryCache::centroid(int i, int j, int k) const {
  if (!uniform_) return at(i, j, k).cen;
  const Vec3 d = m_->spacing();
  return {m_->lo.x + (i + 0.5) * d.x, m_->lo.y + (j + 0.5) * d.y, m_->lo.z + (k + 0.5) * d.z};
}

CellGeom GeometryCache::cell(int i, int j, int k) const {
  if (!uniform_) return at(i, j, k);
  CellGeom g = shared_;
  g.cen = centroid(i, j, k);
  for (auto& nd : g.node) nd.x += g.cen;
  return g;
}

GaussRule1D init_rule() {
  // 5-point Gauss-Legendre on [-1,1], scaled to [-1/2,1/2].
  static const GaussRule1D r = [] {
    GaussRule1D q;
    const double a1 = 0.9061798459386640, a2 = 0.5384693101056831;
    const double w1 = 0.2369268850561891, w2 = 0.4786286704993665, w0 = 0.5688888888888889;
    q.x = {-a1 / 2, -a2 / 2, 0.0, a2 / 2, a1 / 2};
    q.w = {w1 / 2, w2 / 2, w0 / 2, w2 / 2, w1 / 2};
    return q;
  }();
  return r;
}

}  // namespace hgks
