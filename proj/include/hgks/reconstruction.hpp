#pragma once

/// @file reconstruction.hpp
/// @brief Adaptive-order piecewise-quadratic reconstruction on the structured
///        mesh. Each cell carries one quadratic least-squares fit over the
///        19-cell stencil (face and planar-edge neighbors) and 24 linear fits
///        over directional 5-cell sub-stencils. A smoothness-weighted blend
///        recovers the full quadratic in smooth regions and degrades gracefully
///        at discontinuities. Reconstruction can run on conserved variables or
///        on characteristic variables projected per face.
///
/// Basis convention: monomials of the scaled offset chi = (x - centroid)/h,
/// h = volume^(1/3), made zero-mean over the home cell so that the cell
/// average of any candidate equals the stored mean exactly (with respect to
/// the 2x2x2 cell quadrature, which is exact on parallelepipeds).

#include <array>
#include <cstdint>

#include "hgks/geometry.hpp"
#include "hgks/types.hpp"

namespace hgks {

// Monomial order: x, y, z, xx, yy, zz, xy, xz, yz.
inline constexpr int kNMono = 9;
inline constexpr int kNBig = 18;   // non-center cells of the quadratic stencil
inline constexpr int kNSub = 24;   // linear sub-stencils
inline constexpr double kGammaSub = 0.0025;            // linear weight per sub-stencil
inline constexpr double kGamma0 = 1.0 - 24.0 * kGammaSub;
inline constexpr double kWenoEps = 1.0e-8;

/// Offsets (di,dj,dk) of the 18 non-center stencil cells, lexicographic.
const std::array<std::array<int, 3>, kNBig>& big_stencil_offsets();

/// Members of each sub-stencil as indices into the 18-offset list. Stencil
/// order: planes (x,y)|z, (y,z)|x, (x,z)|y; quadrants (+,+), (-,+), (+,-),
/// (-,-); out-of-plane neighbor '+' first.
const std::array<std::array<int, 4>, kNSub>& sub_stencil_members();

/// Per-cell least-squares operators (geometry only, data independent).
struct ReconOps {
  std::array<double, kNMono * kNBig> big;  // 9x18 pseudo-inverse, row-major
  std::array<double, kNSub * 12> sub;      // 24 stacked 3x4 pseudo-inverses
  std::array<double, kNMono> mbar;         // home-cell monomial averages
  std::array<double, 81> b0form;           // beta_0 = a^T * b0form * a
};

ReconOps build_recon_ops(const GeometryCache& geo, const StructuredMesh& m, int i, int j, int k);

/// Raw fit of the conserved fields on one cell.
struct RawFit {
  std::array<double, 5> mean;
  std::array<double, 5 * kNMono> big;      // [field*9 + mono]
  std::array<double, 5 * kNSub * 3> sub;   // [(field*24 + s)*3 + mono]
  std::uint8_t first_order = 0;            // positivity fallback engaged
};

/// Blended quadratic (conserved-variable path).
struct BlendedFit {
  std::array<double, 5> mean;
  std::array<double, 5 * kNMono> c;
};

/// q19[0] is the home-cell mean, q19[1..18] follow big_stencil_offsets().
void fit_cell(const ReconOps& ops, const State5* q19, RawFit& out);

/// Nonlinear adaptive-order weights for one field of a fit.
struct WeightSet {
  double w0 = 1.0;
  std::array<double, kNSub> wm{};
};
WeightSet ao_weights(const ReconOps& ops, const double* big9, const double* sub72);

/// Blend one field into 9 quadratic coefficients.
void blend_field(const WeightSet& w, const double* big9, const double* sub72, double* out9);

void blend_conservative(const ReconOps& ops, const RawFit& fit, BlendedFit& out);

/// Value and scaled gradient of a blended field at chi; gradient is with
/// respect to chi (divide by h for physical space).
struct EvalPoint {
  double val;
  Vec3 grad;
};
EvalPoint evaluate_field(const ReconOps& ops, const double* c9, double mean, const Vec3& chi);

/// True if every candidate polynomial keeps density and pressure positive at
/// the supplied points (the cell's face Gauss points).
bool candidates_positive(const ReconOps& ops, const RawFit& fit, const Vec3* chi, int npts,
                         double gamma);

/// Characteristic decomposition at a face from the Roe-averaged state.
struct EigenSystem {
  std::array<double, 25> L, R;  // row-major 5x5, L*R = I
  bool ok = false;
};
EigenSystem roe_eigensystem(const State5& ql, const State5& qr, const Vec3& n, const Vec3& t1,
                            const Vec3& t2, double gamma);

/// Project a raw fit into characteristic variables: out_field = sum L[f][g] in_field_g.
void project_fit(const std::array<double, 25>& L, const RawFit& in, RawFit& out);

}  // namespace hgks
