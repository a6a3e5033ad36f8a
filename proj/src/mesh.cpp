#include "hgks/mesh.hpp"

namespace hgks {

static void allocate(StructuredMesh& m) {
  const std::size_t nv =
      static_cast<std::size_t>(m.vcount(m.nx)) * m.vcount(m.ny) * m.vcount(m.nz);
  m.pos.assign(nv, Vec3{});
  m.vel.assign(nv, Vec3{});
}

StructuredMesh StructuredMesh::uniform_box(const Vec3& lo, const Vec3& hi, int nx, int ny,
                                           int nz) {
  StructuredMesh m;
  m.nx = nx;
  m.ny = ny;
  m.nz = nz;
  m.lo = lo;
  m.hi = hi;
  m.uniform = true;
  m.moving = false;
  m.map = [](const Vec3& xi, double) { return xi; };
  allocate(m);
  m.snap_to_time(0.0);
  return m;
}

StructuredMesh StructuredMesh::mapped_box(const Vec3& lo, const Vec3& hi, int nx, int ny, int nz,
                                          VertexMap map, bool moving) {
  StructuredMesh m;
  m.nx = nx;
  m.ny = ny;
  m.nz = nz;
  m.lo = lo;
  m.hi = hi;
  m.uniform = false;
  m.moving = moving;
  m.map = std::move(map);
  allocate(m);
  m.snap_to_time(0.0);
  return m;
}

std::array<std::size_t, 8> StructuredMesh::cell_corners(int i, int j, int k) const {
  std::array<std::size_t, 8> c;
  for (int b = 0; b < 8; ++b) {
    const int di = (b >> 2) & 1, dj = (b >> 1) & 1, dk = b & 1;
    c[b] = vid(i + di, j + dj, k + dk);
  }
  return c;
}

void StructuredMesh::snap_to_time(double t) {
  time = t;
  for (int i = -gw; i <= nx + gw; ++i)
    for (int j = -gw; j <= ny + gw; ++j)
      for (int k = -gw; k <= nz + gw; ++k) pos[vid(i, j, k)] = map(ref_coord(i, j, k), t);
  for (auto& v : vel) v = Vec3{};
}

void StructuredMesh::set_step_velocities(double dt) {
  if (!moving) return;
  for (int i = -gw; i <= nx + gw; ++i)
    for (int j = -gw; j <= ny + gw; ++j)
      for (int k = -gw; k <= nz + gw; ++k) {
        const std::size_t v = vid(i, j, k);
        const Vec3 target = map(ref_coord(i, j, k), time + dt);
        vel[v] = (target - pos[v]) * (1.0 / dt);
      }
}

void StructuredMesh::drift(double dt_part) {
  if (!moving) {
    time += dt_part;
    return;
  }
  for (std::size_t v = 0; v < pos.size(); ++v) pos[v] += vel[v] * dt_part;
  time += dt_part;
}

}  // namespace hgks
