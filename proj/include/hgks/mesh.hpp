#pragma once

/// @file mesh.hpp
/// @brief Structured hexahedral mesh with two ghost layers. Vertices come from
///        an analytic map of a reference lattice, which also defines ghost
///        geometry (periodic-compatible maps extend smoothly) and mesh motion.
///        Within a time step vertices move with constant velocity; step-end
///        positions land exactly on the map.

#include <functional>
#include <vector>

#include "hgks/types.hpp"

namespace hgks {

/// Maps a reference lattice point to physical space at time t.
using VertexMap = std::function<Vec3(const Vec3&, double)>;

struct StructuredMesh {
  int nx = 0, ny = 0, nz = 0;  // interior cell counts
  int gw = 2;                  // ghost cell layers per side
  Vec3 lo, hi;                 // reference box
  bool moving = false;
  bool uniform = true;  // axis-aligned lattice with constant spacing
  VertexMap map;
  double time = 0.0;

  std::vector<Vec3> pos;  // vertex positions (ghost margin included)
  std::vector<Vec3> vel;  // per-step vertex velocities

  static StructuredMesh uniform_box(const Vec3& lo, const Vec3& hi, int nx, int ny, int nz);
  /// General mapped lattice; `moving` meshes re-evaluate the map in time.
  static StructuredMesh mapped_box(const Vec3& lo, const Vec3& hi, int nx, int ny, int nz,
                                   VertexMap map, bool moving);

  int vcount(int n) const { return n + 2 * gw + 1; }
  int ccount(int n) const { return n + 2 * gw; }

  /// Vertex id; indices range over [-gw, n+gw].
  std::size_t vid(int i, int j, int k) const {
    return (static_cast<std::size_t>(i + gw) * vcount(ny) + (j + gw)) * vcount(nz) + (k + gw);
  }
  /// Cell id; indices range over [-gw, n+gw-1].
  std::size_t cid(int i, int j, int k) const {
    return (static_cast<std::size_t>(i + gw) * ccount(ny) + (j + gw)) * ccount(nz) + (k + gw);
  }
  std::size_t num_cells() const {
    return static_cast<std::size_t>(ccount(nx)) * ccount(ny) * ccount(nz);
  }

  Vec3 spacing() const {
    return {(hi.x - lo.x) / nx, (hi.y - lo.y) / ny, (hi.z - lo.z) / nz};
  }
  Vec3 ref_coord(int i, int j, int k) const {
    const Vec3 d = spacing();
    return {lo.x + i * d.x, lo.y + j * d.y, lo.z + k * d.z};
  }

  /// Corner vertex ids of cell (i,j,k); bit 2 selects +xi, bit 1 +eta, bit 0 +zeta.
  std::array<std::size_t, 8> cell_corners(int i, int j, int k) const;

  /// Place every vertex on the map at time t and zero the velocities.
  void snap_to_time(double t);
  /// Constant per-step velocities so that drifting by dt lands on map(xi, time+dt).
  void set_step_velocities(double dt);
  /// Advance vertex positions along the current velocities.
  void drift(double dt_part);
};

}  // namespace hgks
