#pragma once

// Mode-level (fixed spatial momentum) commutator and anticommutator kernels
// for the massive vector, massless Weyl spinor and massless vector fields,
// the Witt <-> Sylvester consistency residual, and pole/dipole
// classification of kernel entries.

#include "sylwitt/finite_difference.hpp"
#include "sylwitt/minkowski.hpp"
#include "sylwitt/transmutators.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace sylwitt {

/// Massive vector field: particle mass m and dilatation constant lambda with
/// m lambda > 0. The coupling is g_Z^2 = m lambda; lambda = m by default.
struct MassiveVectorParams {
  double mass;
  double lambda;

  explicit MassiveVectorParams(double m) : MassiveVectorParams(m, m) {}
  MassiveVectorParams(double m, double l) : mass(m), lambda(l) {
    if (!(m > 0.0)) throw DomainError("massive vector requires m > 0");
    if (!(m * l > 0.0)) throw DomainError("massive vector requires m*lambda > 0");
  }

  [[nodiscard]] double coupling2() const { return mass * lambda; }
};

enum class KernelVariant {
  /// Field commutator (bosons) or the canonical anticommutator (spinors).
  commutator,
  /// Fock expectation of the anticommutator (bosons) or commutator (spinors).
  fock,
};

enum class KernelSpecies {
  massive_vector_spin,
  massive_vector_lorentz,
  massless_spinor,
  massless_vector_rest,
  witt_transverse,
  witt_lightlike,
};

[[nodiscard]] inline const char* to_string(KernelSpecies s) {
  switch (s) {
    case KernelSpecies::massive_vector_spin: return "massive_vector_spin";
    case KernelSpecies::massive_vector_lorentz: return "massive_vector_lorentz";
    case KernelSpecies::massless_spinor: return "massless_spinor";
    case KernelSpecies::massless_vector_rest: return "massless_vector_rest";
    case KernelSpecies::witt_transverse: return "witt_transverse";
    case KernelSpecies::witt_lightlike: return "witt_lightlike";
  }
  return "unknown";
}

/// A matrix-valued function of x0 at one fixed spatial momentum.
struct ModeKernel {
  KernelSpecies species;
  KernelVariant variant;
  Eigen::Index rows;
  Eigen::Index cols;
  std::function<MatXc(double)> evaluate;

  [[nodiscard]] MatXc operator()(double x0) const { return evaluate(x0); }
};

// ---------------------------------------------------------------------------
// Massive vector (Sylvester)

struct MassiveVectorMode {
  /// [ZZ]^{ab}(x0) in the spin regime.
  Mat3c spin;
  /// Lambda diag(0, spin) Lambda^T in the Lorentz regime.
  Mat4c lorentz;
};

/// Spin block m lambda delta^{ab} i sin(q0 x0) (commutator) or
/// m lambda delta^{ab} cos(q0 x0) (fock), embedded into Lorentz indices by the
/// boost Lambda(q,m) with a zero time row and column.
[[nodiscard]] inline MassiveVectorMode massive_vector_mode(double x0, const MassiveVectorParams& p, const Vec3& q,
                                                           KernelVariant variant) {
  const MassiveMomentum mom(p.mass, q);
  const double phase = mom.energy() * x0;
  const complex value = variant == KernelVariant::commutator ? I * std::sin(phase) : complex(std::cos(phase));
  MassiveVectorMode out;
  out.spin = p.coupling2() * value * Mat3c::Identity();

  Mat4c padded = Mat4c::Zero();
  padded.block<3, 3>(1, 1) = out.spin;
  const Mat4c boost = lorentz_boost(mom).cast<complex>();
  out.lorentz = boost * padded * boost.transpose();
  return out;
}

/// Blocks of the canonical pair (Z^a, G^{a0}) in the spin regime:
///   [[ [iG,Z], [Z,Z] ], [ [G,G], [Z,-iG] ]]
/// obtained from [ZZ] by the time-derivative substitution:
///   [iG,Z] = [Z,-iG] = -i d/dx0 [ZZ] / (m lambda) = q0 cos(q0 x0) delta
///   [G,G] = -d^2/dx0^2 [ZZ] / (m lambda)^2 = q0^2/(m lambda) i sin(q0 x0) delta
/// Only the diagonal (canonical) blocks survive at x0 = 0.
using DerivedBlocks = std::array<std::array<Mat3c, 2>, 2>;

[[nodiscard]] inline DerivedBlocks massive_vector_derived_blocks(double x0, const MassiveVectorParams& p,
                                                                 const Vec3& q) {
  const double q0 = MassiveMomentum(p.mass, q).energy();
  const double c = std::cos(q0 * x0), s = std::sin(q0 * x0);
  const double g2 = p.coupling2();
  const Mat3c id = Mat3c::Identity();
  DerivedBlocks b;
  b[0][0] = q0 * c * id;
  b[0][1] = g2 * I * s * id;
  b[1][0] = (q0 * q0 / g2) * I * s * id;
  b[1][1] = q0 * c * id;
  return b;
}

// ---------------------------------------------------------------------------
// Massless Weyl spinor (Witt)

/// Energy-integrated spinor kernel at fixed q:
///   commutator variant (the canonical anticommutator {l*, l}):
///     p_+ e^{i x0 q0} + p_- e^{-i x0 q0},   K(0) = 1
///   fock variant (the Fock commutator expectation):
///     p_+ e^{i x0 q0} - p_- e^{-i x0 q0}
/// The negative-energy root carries eps(q0) = -1 in the first case and the
/// factor rho^j q_j = q0 + sigma.q evaluated at q0 = -|q| gives -2|q| p_-.
/// Both solve the mode Weyl equation dK/dx0 = i (sigma.q) K.
[[nodiscard]] inline SpinorMatrix massless_spinor_mode(double x0, const Vec3& q, KernelVariant variant) {
  const LightlikeMomentum mom(q);
  const auto [plus, minus] = helicity_projectors(mom);
  const complex forward = std::polar(1.0, x0 * mom.energy());
  const complex backward = std::conj(forward);
  const double sign = variant == KernelVariant::commutator ? 1.0 : -1.0;
  return plus * forward + sign * minus * backward;
}

// ---------------------------------------------------------------------------
// Massless vector (Witt)

/// Rest-frame commutator [AA]^{kj}(x0, q) with pole and dipole parts:
///   -mu^2 eta i sin X
///   - (mu^2 + eps sigma^2)/2 [[ i(X cos X + sin X),  x0 q^a sin X ],
///                             [ x0 q^b sin X,  q^a q^b/q0^2 i(X cos X - sin X) ]]
/// with X = x0 q0, q0 = |q|.
[[nodiscard]] inline Mat4c massless_vector_rest_mode(double x0, const Vec3& q, const GaugeTriple& g) {
  const LightlikeMomentum mom(q);
  const double q0 = mom.energy();
  const double x = x0 * q0;
  const double c = std::cos(x), s = std::sin(x);
  const double dipole = 0.5 * (g.mu2 + g.eps_sigma2);

  Mat4c m;
  m(0, 0) = I * (x * c + s);
  for (int a = 0; a < 3; ++a) {
    m(0, a + 1) = m(a + 1, 0) = x0 * q[a] * s;
    for (int b = 0; b < 3; ++b) {
      m(a + 1, b + 1) = q[a] * q[b] / (q0 * q0) * I * (x * c - s);
    }
  }
  const Mat4c eta = MetricForm::sylvester().matrix.cast<complex>();
  return -g.mu2 * I * s * eta - dipole * m;
}

struct WittBlocks {
  /// Witt slots (1,2): mu^2 i sin(x0 q0) 1_2, the two photon polarizations.
  SpinorMatrix transverse;
  /// Witt slots (0,3): (mu^2/2) [[ i X/M0 e^{-iX}, N0 i sin X ], [ N0 i sin X, i X/M0 e^{iX} ]].
  SpinorMatrix lightlike;
};

[[nodiscard]] inline WittBlocks massless_vector_witt_blocks(double x0, double q0, const GaugeTriple& g) {
  if (!(q0 > 0.0)) throw DomainError("Witt blocks require q0 > 0");
  const double x = x0 * q0;
  const double s = std::sin(x);
  const complex e = std::polar(1.0, x);
  const double inv_m0 = g.inv_m0(), n0 = g.n0();

  WittBlocks out;
  out.transverse = g.mu2 * I * s * SpinorMatrix::Identity();
  out.lightlike << I * x * inv_m0 * std::conj(e), n0 * I * s, n0 * I * s, I * x * inv_m0 * e;
  out.lightlike *= 0.5 * g.mu2;
  return out;
}

/// Fock anticommutator of the transverse photons: mu^2 cos(x0 q0) 1_2.
[[nodiscard]] inline SpinorMatrix massless_vector_transverse_fock(double x0, double q0, const GaugeTriple& g) {
  if (!(q0 > 0.0)) throw DomainError("Witt blocks require q0 > 0");
  return g.mu2 * std::cos(x0 * q0) * SpinorMatrix::Identity();
}

/// Both Witt blocks assembled into one 4x4 matrix in the Witt basis: the
/// lightlike block in slots (0,3), the transverse block in slots (1,2).
[[nodiscard]] inline Mat4c witt_basis_kernel(double x0, double q0, const GaugeTriple& g) {
  const WittBlocks b = massless_vector_witt_blocks(x0, q0, g);
  Mat4c k = Mat4c::Zero();
  k.block<2, 2>(1, 1) = b.transverse;
  k(0, 0) = b.lightlike(0, 0);
  k(0, 3) = b.lightlike(0, 1);
  k(3, 0) = b.lightlike(1, 0);
  k(3, 3) = b.lightlike(1, 1);
  return k;
}

/// max |H(q) K_witt(x0) H(q)^T - [AA]_rest(x0, q)|: transporting the Witt
/// blocks into the Sylvester basis must reproduce the rest-frame kernel.
[[nodiscard]] inline double witt_sylvester_residual(double x0, const Vec3& q, const GaugeTriple& g,
                                                    double chart_tol = default_chart_tol) {
  const LightlikeMomentum mom(q);
  const Mat4c h = sylvester_witt(mom, chart_tol).cast<complex>();
  const Mat4c transported = h * witt_basis_kernel(x0, mom.energy(), g) * h.transpose();
  return max_abs(transported - massless_vector_rest_mode(x0, q, g));
}

// ---------------------------------------------------------------------------
// ModeKernel factories

[[nodiscard]] inline ModeKernel massive_vector_spin_kernel(const MassiveVectorParams& p, const Vec3& q,
                                                           KernelVariant variant) {
  MassiveMomentum(p.mass, q);  // validate eagerly
  return {KernelSpecies::massive_vector_spin, variant, 3, 3,
          [p, q, variant](double x0) -> MatXc { return massive_vector_mode(x0, p, q, variant).spin; }};
}

[[nodiscard]] inline ModeKernel massive_vector_lorentz_kernel(const MassiveVectorParams& p, const Vec3& q,
                                                              KernelVariant variant) {
  MassiveMomentum(p.mass, q);
  return {KernelSpecies::massive_vector_lorentz, variant, 4, 4,
          [p, q, variant](double x0) -> MatXc { return massive_vector_mode(x0, p, q, variant).lorentz; }};
}

[[nodiscard]] inline ModeKernel massless_spinor_kernel(const Vec3& q, KernelVariant variant) {
  LightlikeMomentum{q};
  return {KernelSpecies::massless_spinor, variant, 2, 2,
          [q, variant](double x0) -> MatXc { return massless_spinor_mode(x0, q, variant); }};
}

[[nodiscard]] inline ModeKernel massless_vector_rest_kernel(const Vec3& q, const GaugeTriple& g) {
  LightlikeMomentum{q};
  return {KernelSpecies::massless_vector_rest, KernelVariant::commutator, 4, 4,
          [q, g](double x0) -> MatXc { return massless_vector_rest_mode(x0, q, g); }};
}

[[nodiscard]] inline ModeKernel witt_transverse_kernel(double q0, const GaugeTriple& g,
                                                       KernelVariant variant = KernelVariant::commutator) {
  if (!(q0 > 0.0)) throw DomainError("Witt blocks require q0 > 0");
  return {KernelSpecies::witt_transverse, variant, 2, 2, [q0, g, variant](double x0) -> MatXc {
            return variant == KernelVariant::commutator ? massless_vector_witt_blocks(x0, q0, g).transverse
                                                        : massless_vector_transverse_fock(x0, q0, g);
          }};
}

[[nodiscard]] inline ModeKernel witt_lightlike_kernel(double q0, const GaugeTriple& g) {
  if (!(q0 > 0.0)) throw DomainError("Witt blocks require q0 > 0");
  return {KernelSpecies::witt_lightlike, KernelVariant::commutator, 2, 2,
          [q0, g](double x0) -> MatXc { return massless_vector_witt_blocks(x0, q0, g).lightlike; }};
}

// ---------------------------------------------------------------------------
// Pole / dipole classification

enum class OdeOrder {
  /// Identically zero on the grid.
  zero,
  /// Annihilated by (d^2/dx0^2 + q0^2).
  pole,
  /// Annihilated only by (d^2/dx0^2 + q0^2)^2.
  dipole,
  /// Neither operator annihilates the entry.
  unresolved,
};

[[nodiscard]] inline const char* to_string(OdeOrder o) {
  switch (o) {
    case OdeOrder::zero: return "zero";
    case OdeOrder::pole: return "pole";
    case OdeOrder::dipole: return "dipole";
    case OdeOrder::unresolved: return "unresolved";
  }
  return "unknown";
}

struct OdeCheckOptions {
  /// Residual threshold, relative to q0^2 (or q0^4) times the entry's scale.
  double tolerance = 1e-5;
  /// An entry is zero when its grid maximum is below this fraction of the
  /// kernel's grid maximum.
  double zero_tolerance = 1e-13;
  int grid_points = 17;
  /// Grid covers [-span, span] periods of 2 pi/q0.
  double span_periods = 2.0;
  /// Finite-difference step in units of 1/q0.
  double step = 0.05;
};

struct OdeOrderTable {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<OdeOrder> labels;
  /// Worst relative residual of (d^2 + q0^2) per entry.
  std::vector<double> pole_residual;
  /// Worst relative residual of (d^2 + q0^2)^2 per entry.
  std::vector<double> dipole_residual;

  [[nodiscard]] OdeOrder at(Eigen::Index r, Eigen::Index c) const { return labels[static_cast<std::size_t>(r * cols + c)]; }
};


/// Applies (d^2/dx0^2 + q0^2) and its square entrywise by finite differences
/// on a grid and labels every entry zero, pole, dipole or unresolved.
[[nodiscard]] inline OdeOrderTable ode_order_check(const std::function<MatXc(double)>& f, Eigen::Index rows,
                                                   Eigen::Index cols, double q0, const OdeCheckOptions& opt = {}) {
  if (!(q0 > 0.0)) throw DomainError("ode_order_check requires q0 > 0");
  if (opt.grid_points < 2) throw DomainError("ode_order_check needs at least two grid points");
  if (!f) throw DomainError("ode_order_check needs a kernel function");

  const double w2 = q0 * q0;
  const double h = opt.step / q0;
  const double span = opt.span_periods * 2.0 * std::numbers::pi / q0;

  auto pole_op = [&](double x) -> MatXc { return fd::second_derivative(f, x, h) + w2 * f(x); };
  auto dipole_op = [&](double x) -> MatXc { return fd::second_derivative(pole_op, x, h) + w2 * pole_op(x); };

  const Eigen::Index n = rows * cols;
  Eigen::ArrayXd scale = Eigen::ArrayXd::Zero(n), pole_res = Eigen::ArrayXd::Zero(n), dip_res = Eigen::ArrayXd::Zero(n);
  for (int i = 0; i < opt.grid_points; ++i) {
    const double x = -span + 2.0 * span * i / (opt.grid_points - 1);
    const MatXc value = f(x);
    const MatXc p = pole_op(x);
    const MatXc d = dipole_op(x);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        const Eigen::Index idx = r * cols + c;
        scale[idx] = std::max(scale[idx], std::abs(value(r, c)));
        pole_res[idx] = std::max(pole_res[idx], std::abs(p(r, c)));
        dip_res[idx] = std::max(dip_res[idx], std::abs(d(r, c)));
      }
    }
  }

  OdeOrderTable table;
  table.rows = rows;
  table.cols = cols;
  const double kernel_scale = scale.maxCoeff();
  for (Eigen::Index idx = 0; idx < n; ++idx) {
    const double entry_scale = scale[idx];
    const double rel_pole = entry_scale > 0.0 ? pole_res[idx] / (w2 * entry_scale) : 0.0;
    const double rel_dipole = entry_scale > 0.0 ? dip_res[idx] / (w2 * w2 * entry_scale) : 0.0;
    table.pole_residual.push_back(rel_pole);
    table.dipole_residual.push_back(rel_dipole);
    if (entry_scale <= opt.zero_tolerance * kernel_scale) {
      table.labels.push_back(OdeOrder::zero);
    } else if (rel_pole <= opt.tolerance) {
      table.labels.push_back(OdeOrder::pole);
    } else if (rel_dipole <= opt.tolerance) {
      table.labels.push_back(OdeOrder::dipole);
    } else {
      table.labels.push_back(OdeOrder::unresolved);
    }
  }
  return table;
}

[[nodiscard]] inline OdeOrderTable ode_order_check(const ModeKernel& kernel, double q0, const OdeCheckOptions& opt = {}) {
  return ode_order_check(kernel.evaluate, kernel.rows, kernel.cols, q0, opt);
}

// ---------------------------------------------------------------------------
// CSV dump

namespace detail {
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace detail

/// Writes one row per x0: x0, then re(k_ij), im(k_ij) in row-major order. The
/// header names the columns x0, re_00, im_00, re_01, ...
inline void write_kernel_csv(std::ostream& os, const ModeKernel& kernel, std::span<const double> grid) {
  os << "x0";
  for (Eigen::Index r = 0; r < kernel.rows; ++r) {
    for (Eigen::Index c = 0; c < kernel.cols; ++c) {
      os << ",re_" << r << c << ",im_" << r << c;
    }
  }
  os << '\n';
  for (double x0 : grid) {
    const MatXc k = kernel(x0);
    os << detail::format_g17(x0);
    for (Eigen::Index r = 0; r < kernel.rows; ++r) {
      for (Eigen::Index c = 0; c < kernel.cols; ++c) {
        os << ',' << detail::format_g17(k(r, c).real()) << ',' << detail::format_g17(k(r, c).imag());
      }
    }
    os << '\n';
  }
}

}  // namespace sylwitt
