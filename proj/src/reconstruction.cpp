#include "hgks/reconstruction.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace hgks {

const std::array<std::array<int, 3>, kNBig>& big_stencil_offsets() {
  static const auto offsets = [] {
    std::array<std::array<int, 3>, kNBig> o{};
    int n = 0;
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj)
        for (int dk = -1; dk <= 1; ++dk) {
          if (di == 0 && dj == 0 && dk == 0) continue;
          if (di * dj * dk != 0) continue;  // drop the 8 corners
          o[n++] = {di, dj, dk};
        }
    return o;
  }();
  return offsets;
}

const std::array<std::array<int, 4>, kNSub>& sub_stencil_members() {
  static const auto members = [] {
    const auto& big = big_stencil_offsets();
    auto find = [&](int di, int dj, int dk) {
      for (int n = 0; n < kNBig; ++n)
        if (big[n][0] == di && big[n][1] == dj && big[n][2] == dk) return n;
      return -1;
    };
    // plane axes (a,b) and out-of-plane axis c per family
    const int plane[3][3] = {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}};
    const int quad[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    std::array<std::array<int, 4>, kNSub> mem{};
    int s = 0;
    for (int f = 0; f < 3; ++f)
      for (int side = 0; side < 2; ++side)  // '+' out-of-plane neighbor first
        for (int q = 0; q < 4; ++q, ++s) {
          const int a = plane[f][0], b = plane[f][1], c = plane[f][2];
          const int sc = side == 0 ? 1 : -1;
          int off[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
          off[0][a] = quad[q][0];
          off[1][b] = quad[q][1];
          off[2][a] = quad[q][0];
          off[2][b] = quad[q][1];
          int out[3] = {0, 0, 0};
          out[c] = sc;
          mem[s] = {find(off[0][0], off[0][1], off[0][2]), find(off[1][0], off[1][1], off[1][2]),
                    find(off[2][0], off[2][1], off[2][2]), find(out[0], out[1], out[2])};
        }
    return mem;
  }();
  return members;
}

namespace {

inline void mono_values(const Vec3& chi, double* m) {
  m[0] = chi.x;
  m[1] = chi.y;
  m[2] = chi.z;
  m[3] = chi.x * chi.x;
  m[4] = chi.y * chi.y;
  m[5] = chi.z * chi.z;
  m[6] = chi.x * chi.y;
  m[7] = chi.x * chi.z;
  m[8] = chi.y * chi.z;
}

// Average of the 9 monomials (relative to cen/h) over a cell given its nodes.
std::array<double, kNMono> monomial_averages(const CellGeom& cg, const Vec3& cen, double h) {
  std::array<double, kNMono> avg{};
  const double ih = 1.0 / h;
  for (const auto& nd : cg.node) {
    const Vec3 chi = (nd.x - cen) * ih;
    double m[kNMono];
    mono_values(chi, m);
    for (int n = 0; n < kNMono; ++n) avg[n] += nd.w * m[n];
  }
  for (int n = 0; n < kNMono; ++n) avg[n] /= cg.vol;
  return avg;
}

}  // namespace

ReconOps build_recon_ops(const GeometryCache& geo, const StructuredMesh& m, int i, int j, int k) {
  ReconOps ops;
  const CellGeom home = geo.cell(i, j, k);
  ops.mbar = monomial_averages(home, home.cen, home.h);

  const auto& offs = big_stencil_offsets();
  Eigen::Matrix<double, kNBig, kNMono> G;
  for (int n = 0; n < kNBig; ++n) {
    const CellGeom nb = geo.cell(i + offs[n][0], j + offs[n][1], k + offs[n][2]);
    const auto avg = monomial_averages(nb, home.cen, home.h);
    for (int c = 0; c < kNMono; ++c) G(n, c) = avg[c] - ops.mbar[c];
  }
  {
    Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<double, kNBig, kNMono>> cod(G);
    const Eigen::Matrix<double, kNMono, kNBig> pinv = cod.pseudoInverse();
    for (int r = 0; r < kNMono; ++r)
      for (int c = 0; c < kNBig; ++c) ops.big[r * kNBig + c] = pinv(r, c);
  }

  const auto& mem = sub_stencil_members();
  for (int s = 0; s < kNSub; ++s) {
    Eigen::Matrix<double, 4, 3> A;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 3; ++c) A(r, c) = G(mem[s][r], c);
    Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<double, 4, 3>> cod(A);
    const Eigen::Matrix<double, 3, 4> pinv = cod.pseudoInverse();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) ops.sub[s * 12 + r * 4 + c] = pinv(r, c);
  }

  // beta_0 quadratic form: cell mean of |grad_chi P|^2 plus the dimensionless
  // second-derivative term. Both are quadratic in the 9 coefficients.
  Eigen::Matrix<double, kNMono, kNMono> F = Eigen::Matrix<double, kNMono, kNMono>::Zero();
  const double ih = 1.0 / home.h;
  for (const auto& nd : home.node) {
    const Vec3 chi = (nd.x - home.cen) * ih;
    // rows: d/dchi_x, d/dchi_y, d/dchi_z of each monomial
    const double gx[kNMono] = {1, 0, 0, 2 * chi.x, 0, 0, chi.y, chi.z, 0};
    const double gy[kNMono] = {0, 1, 0, 0, 2 * chi.y, 0, chi.x, 0, chi.z};
    const double gz[kNMono] = {0, 0, 1, 0, 0, 2 * chi.z, 0, chi.x, chi.y};
    const double wn = nd.w / home.vol;
    for (int a = 0; a < kNMono; ++a)
      for (int b = 0; b < kNMono; ++b)
        F(a, b) += wn * (gx[a] * gx[b] + gy[a] * gy[b] + gz[a] * gz[b]);
  }
  const double d2[kNMono] = {0, 0, 0, 4, 4, 4, 1, 1, 1};
  for (int a = 0; a < kNMono; ++a) F(a, a) += d2[a];
  for (int a = 0; a < kNMono; ++a)
    for (int b = 0; b < kNMono; ++b) ops.b0form[a * kNMono + b] = F(a, b);
  return ops;
}

void fit_cell(const ReconOps& ops, const State5* q19, RawFit& out) {
  out.first_order = 0;
  double d[kNBig][5];
  for (int n = 0; n < kNBig; ++n)
    for (int f = 0; f < 5; ++f) d[n][f] = q19[n + 1][f] - q19[0][f];
  for (int f = 0; f < 5; ++f) out.mean[f] = q19[0][f];

  for (int f = 0; f < 5; ++f) {
    double* a = &out.big[f * kNMono];
    for (int r = 0; r < kNMono; ++r) {
      double acc = 0.0;
      const double* row = &ops.big[r * kNBig];
      for (int c = 0; c < kNBig; ++c) acc += row[c] * d[c][f];
      a[r] = acc;
    }
  }
  const auto& mem = sub_stencil_members();
  for (int f = 0; f < 5; ++f)
    for (int s = 0; s < kNSub; ++s) {
      const double* pinv = &ops.sub[s * 12];
      const double rhs[4] = {d[mem[s][0]][f], d[mem[s][1]][f], d[mem[s][2]][f], d[mem[s][3]][f]};
      double* b = &out.sub[(f * kNSub + s) * 3];
      for (int r = 0; r < 3; ++r)
        b[r] = pinv[r * 4 + 0] * rhs[0] + pinv[r * 4 + 1] * rhs[1] + pinv[r * 4 + 2] * rhs[2] +
               pinv[r * 4 + 3] * rhs[3];
    }
}

WeightSet ao_weights(const ReconOps& ops, const double* big9, const double* sub72) {
  double beta0 = 0.0;
  for (int a = 0; a < kNMono; ++a) {
    double acc = 0.0;
    const double* row = &ops.b0form[a * kNMono];
    for (int b = 0; b < kNMono; ++b) acc += row[b] * big9[b];
    beta0 += big9[a] * acc;
  }
  double betam[kNSub], tau = 0.0;
  for (int s = 0; s < kNSub; ++s) {
    const double* b = &sub72[s * 3];
    betam[s] = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    tau += std::fabs(beta0 - betam[s]);
  }
  tau /= kNSub;

  WeightSet w;
  double w0 = kGamma0 * (1.0 + tau / (beta0 + kWenoEps));
  double sum = w0;
  for (int s = 0; s < kNSub; ++s) {
    w.wm[s] = kGammaSub * (1.0 + tau / (betam[s] + kWenoEps));
    sum += w.wm[s];
  }
  const double inv = 1.0 / sum;
  w.w0 = w0 * inv;
  for (int s = 0; s < kNSub; ++s) w.wm[s] *= inv;
  return w;
}

void blend_field(const WeightSet& w, const double* big9, const double* sub72, double* out9) {
  const double c0 = w.w0 / kGamma0;
  for (int n = 0; n < kNMono; ++n) out9[n] = c0 * big9[n];
  for (int s = 0; s < kNSub; ++s) {
    const double cm = w.wm[s] - c0 * kGammaSub;
    const double* b = &sub72[s * 3];
    out9[0] += cm * b[0];
    out9[1] += cm * b[1];
    out9[2] += cm * b[2];
  }
}

void blend_conservative(const ReconOps& ops, const RawFit& fit, BlendedFit& out) {
  out.mean = fit.mean;
  if (fit.first_order) {
    out.c.fill(0.0);
    return;
  }
  for (int f = 0; f < 5; ++f) {
    const WeightSet w = ao_weights(ops, &fit.big[f * kNMono], &fit.sub[f * kNSub * 3]);
    blend_field(w, &fit.big[f * kNMono], &fit.sub[f * kNSub * 3], &out.c[f * kNMono]);
  }
}

EvalPoint evaluate_field(const ReconOps& ops, const double* c9, double mean, const Vec3& chi) {
  double m[kNMono];
  mono_values(chi, m);
  EvalPoint e;
  double v = mean;
  for (int n = 0; n < kNMono; ++n) v += c9[n] * (m[n] - ops.mbar[n]);
  e.val = v;
  e.grad.x = c9[0] + 2 * c9[3] * chi.x + c9[6] * chi.y + c9[7] * chi.z;
  e.grad.y = c9[1] + 2 * c9[4] * chi.y + c9[6] * chi.x + c9[8] * chi.z;
  e.grad.z = c9[2] + 2 * c9[5] * chi.z + c9[7] * chi.x + c9[8] * chi.y;
  return e;
}

bool candidates_positive(const ReconOps& ops, const RawFit& fit, const Vec3* chi, int npts,
                         double gamma) {
  for (int p = 0; p < npts; ++p) {
    double m[kNMono];
    mono_values(chi[p], m);
    double mz[kNMono];
    for (int n = 0; n < kNMono; ++n) mz[n] = m[n] - ops.mbar[n];

    State5 q;
    for (int f = 0; f < 5; ++f) {
      double v = fit.mean[f];
      const double* a = &fit.big[f * kNMono];
      for (int n = 0; n < kNMono; ++n) v += a[n] * mz[n];
      q[f] = v;
    }
    if (q[0] <= 0.0 || pressure(q, gamma) <= 0.0) return false;

    for (int s = 0; s < kNSub; ++s) {
      for (int f = 0; f < 5; ++f) {
        const double* b = &fit.sub[(f * kNSub + s) * 3];
        q[f] = fit.mean[f] + b[0] * mz[0] + b[1] * mz[1] + b[2] * mz[2];
      }
      if (q[0] <= 0.0 || pressure(q, gamma) <= 0.0) return false;
    }
  }
  return true;
}

EigenSystem roe_eigensystem(const State5& ql, const State5& qr, const Vec3& n, const Vec3& t1,
                            const Vec3& t2, double gamma) {
  EigenSystem es;
  if (ql[0] <= 0.0 || qr[0] <= 0.0) return es;
  const EulerPrim wl = cons_to_prim(ql, gamma), wr = cons_to_prim(qr, gamma);
  if (wl.p <= 0.0 || wr.p <= 0.0) return es;
  const double sl = std::sqrt(wl.rho), sr = std::sqrt(wr.rho);
  const double is = 1.0 / (sl + sr);
  const Vec3 u = {(sl * wl.u + sr * wr.u) * is, (sl * wl.v + sr * wr.v) * is,
                  (sl * wl.w + sr * wr.w) * is};
  const double Hl = (ql[4] + wl.p) / wl.rho, Hr = (qr[4] + wr.p) / wr.rho;
  const double H = (sl * Hl + sr * Hr) * is;
  const double q2 = u.dot(u);
  const double c2 = (gamma - 1.0) * (H - 0.5 * q2);
  if (!(c2 > 0.0)) return es;
  const double c = std::sqrt(c2);
  const double un = u.dot(n), us = u.dot(t1), ut = u.dot(t2);

  auto R = [&](int r, int cc) -> double& { return es.R[r * 5 + cc]; };
  auto L = [&](int r, int cc) -> double& { return es.L[r * 5 + cc]; };
  // columns: u-c, u, shear(t1), shear(t2), u+c
  const double col[5][5] = {
      {1.0, u.x - c * n.x, u.y - c * n.y, u.z - c * n.z, H - c * un},
      {1.0, u.x, u.y, u.z, 0.5 * q2},
      {0.0, t1.x, t1.y, t1.z, us},
      {0.0, t2.x, t2.y, t2.z, ut},
      {1.0, u.x + c * n.x, u.y + c * n.y, u.z + c * n.z, H + c * un},
  };
  for (int cc = 0; cc < 5; ++cc)
    for (int r = 0; r < 5; ++r) R(r, cc) = col[cc][r];

  const double b2 = (gamma - 1.0) / c2;
  const double b1 = 0.5 * b2 * q2;
  const double row[5][5] = {
      {0.5 * (b1 + un / c), 0.5 * (-b2 * u.x - n.x / c), 0.5 * (-b2 * u.y - n.y / c),
       0.5 * (-b2 * u.z - n.z / c), 0.5 * b2},
      {1.0 - b1, b2 * u.x, b2 * u.y, b2 * u.z, -b2},
      {-us, t1.x, t1.y, t1.z, 0.0},
      {-ut, t2.x, t2.y, t2.z, 0.0},
      {0.5 * (b1 - un / c), 0.5 * (-b2 * u.x + n.x / c), 0.5 * (-b2 * u.y + n.y / c),
       0.5 * (-b2 * u.z + n.z / c), 0.5 * b2},
  };
  for (int r = 0; r < 5; ++r)
    for (int cc = 0; cc < 5; ++cc) L(r, cc) = row[r][cc];
  es.ok = true;
  return es;
}

void project_fit(const std::array<double, 25>& L, const RawFit& in, RawFit& out) {
  out.first_order = in.first_order;
  for (int f = 0; f < 5; ++f) {
    const double* l = &L[f * 5];
    out.mean[f] = l[0] * in.mean[0] + l[1] * in.mean[1] + l[2] * in.mean[2] + l[3] * in.mean[3] +
                  l[4] * in.mean[4];
    for (int n = 0; n < kNMono; ++n) {
      double acc = 0.0;
      for (int g = 0; g < 5; ++g) acc += l[g] * in.big[g * kNMono + n];
      out.big[f * kNMono + n] = acc;
    }
    for (int s = 0; s < kNSub; ++s)
      for (int n = 0; n < 3; ++n) {
        double acc = 0.0;
        for (int g = 0; g < 5; ++g) acc += l[g] * in.sub[(g * kNSub + s) * 3 + n];
        out.sub[(f * kNSub + s) * 3 + n] = acc;
      }
  }
}

}  // namespace hgks
