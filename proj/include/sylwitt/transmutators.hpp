#pragma once

// Coset representatives ("transmutators") and projectors:
//
//   SL(2,C)/SU(2)  weyl_boost       s(q,m)
//   SO+(1,3)/SO(3) lorentz_boost    Lambda(q,m)
//   SU(2)/U(1)     witt_rotation_su2 u(q)
//   SO(3)/SO(2)    witt_rotation_so3 O(q)
//   Sylvester <-> Witt basis change w and H(q) = O(q) w.
//
// Every explicit matrix here is a direct closed form; the composed routes
// (vector_rep of the spinor versions, O w) are used as cross-checks.

#include "sylwitt/minkowski.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace sylwitt {

/// q on the forward mass shell q^2 = m^2 with m > 0.
class MassiveMomentum {
 public:
  MassiveMomentum(double m, const Vec3& q) : m_(m), q_(q) {
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("massive momentum requires m > 0");
  }

  [[nodiscard]] double mass() const { return m_; }
  [[nodiscard]] const Vec3& space() const { return q_; }
  [[nodiscard]] double energy() const { return std::sqrt(m_ * m_ + q_.squaredNorm()); }
  [[nodiscard]] FourVector four() const { return FourVector::on_shell(m_, q_); }

 private:
  double m_;
  Vec3 q_;
};

/// q on the forward light cone, q != 0.
class LightlikeMomentum {
 public:
  explicit LightlikeMomentum(const Vec3& q) : q_(q) {
    if (!(q.norm() > 0.0) || !q.allFinite()) throw DomainError("lightlike momentum requires q != 0");
  }

  [[nodiscard]] const Vec3& space() const { return q_; }
  [[nodiscard]] double energy() const { return q_.norm(); }
  [[nodiscard]] FourVector four() const { return FourVector::lightlike(q_); }

 private:
  Vec3 q_;
};

/// Gauge-sector parameters of the massless vector field: the coupling mu^2 and
/// the signed gauge fixing constant eps*sigma^2.
struct GaugeTriple {
  double mu2;
  double eps_sigma2;

  GaugeTriple(double mu2_, double eps_sigma2_) : mu2(mu2_), eps_sigma2(eps_sigma2_) {
    if (!(mu2 > 0.0)) throw DomainError("gauge triple requires mu^2 > 0");
    if (eps_sigma2 == 0.0 || !std::isfinite(eps_sigma2)) throw DomainError("gauge fixing constant must be nonzero");
  }

  /// The Feynman point eps*sigma^2 = -mu^2, where the dipole terms cancel.
  static GaugeTriple feynman(double mu2_) { return {mu2_, -mu2_}; }

  /// 1/M_0 = -(mu^2 + eps sigma^2) / mu^2.
  [[nodiscard]] double inv_m0() const { return -(mu2 + eps_sigma2) / mu2; }
  /// N_0 = (3 mu^2 + eps sigma^2) / mu^2.
  [[nodiscard]] double n0() const { return (3.0 * mu2 + eps_sigma2) / mu2; }
};

/// Relative distance from the -z direction below which u(q) is rejected.
inline constexpr double default_chart_tol = 1e-10;

/// s(q,m) = sqrt((q0+m)/2m) [1 + sigma.q/(q0+m)]. Hermitian, det 1,
/// s s^dagger = slash(q)/m.
[[nodiscard]] inline SpinorMatrix weyl_boost(const MassiveMomentum& p) {
  const double m = p.mass();
  const double q0 = p.energy();
  const double scale = std::sqrt((q0 + m) / (2.0 * m));
  return scale * (pauli(0) + sigma_dot(p.space()) / (q0 + m));
}

/// s(q,m)^{-1} = sqrt((q0+m)/2m) [1 - sigma.q/(q0+m)].
[[nodiscard]] inline SpinorMatrix weyl_boost_inverse(const MassiveMomentum& p) {
  const double m = p.mass();
  const double q0 = p.energy();
  const double scale = std::sqrt((q0 + m) / (2.0 * m));
  return scale * (pauli(0) - sigma_dot(p.space()) / (q0 + m));
}

/// Lambda(q,m) = (1/m) [[q0, q^T], [q, m delta + q q^T/(q0+m)]].
[[nodiscard]] inline LorentzMatrix lorentz_boost(const MassiveMomentum& p) {
  const double m = p.mass();
  const double q0 = p.energy();
  const Vec3& q = p.space();
  LorentzMatrix out;
  out(0, 0) = q0;
  out.block<1, 3>(0, 1) = q.transpose();
  out.block<3, 1>(1, 0) = q;
  out.block<3, 3>(1, 1) = m * Eigen::Matrix3d::Identity() + q * q.transpose() / (q0 + m);
  return out / m;
}

/// Spin-1 projector with both indices up: P^{kj} = -eta^{kj} + q^k q^j / m^2.
/// Equals Lambda diag(0,1,1,1) Lambda^T.
[[nodiscard]] inline LorentzMatrix spin1_projector(const MassiveMomentum& p) {
  const Vec4 q = p.four().vector();
  const double m = p.mass();
  return -MetricForm::sylvester().matrix + q * q.transpose() / (m * m);
}

/// The mixed-index form P^{kj} (-eta)_{jl} = delta^k_l - q^k q_l / m^2. This is
/// the idempotent, trace-3 projector onto the space orthogonal to q.
[[nodiscard]] inline LorentzMatrix spin1_projector_mixed(const MassiveMomentum& p) {
  return -spin1_projector(p) * MetricForm::sylvester().matrix;
}

/// p_+-(q) = 1/2 [1 +- sigma.q/q0].
[[nodiscard]] inline std::pair<SpinorMatrix, SpinorMatrix> helicity_projectors(const LightlikeMomentum& q) {
  const SpinorMatrix n = sigma_dot(q.space()) / q.energy();
  return {0.5 * (pauli(0) + n), 0.5 * (pauli(0) - n)};
}

namespace detail {
inline void require_chart(const LightlikeMomentum& q, double chart_tol) {
  const double q0 = q.energy();
  if (!(q0 + q.space().z() > chart_tol * q0)) {
    throw SingularChart("Sylvester-Witt chart is singular: q^0 + q^3 ~ 0 (momentum along -z)");
  }
}
}  // namespace detail

/// u(q) = [[q0+q3, -q1+i q2], [q1+i q2, q0+q3]] / sqrt(2 q0 (q0+q3)).
/// Maps (1 +- sigma^3)/2 onto the helicity projectors p_+-(q).
[[nodiscard]] inline SpinorMatrix witt_rotation_su2(const LightlikeMomentum& q,
                                                    double chart_tol = default_chart_tol) {
  detail::require_chart(q, chart_tol);
  const double q0 = q.energy();
  const double q1 = q.space().x(), q2 = q.space().y(), q3 = q.space().z();
  SpinorMatrix u;
  u << q0 + q3, complex(-q1, q2), complex(q1, q2), q0 + q3;
  return u / std::sqrt(2.0 * q0 * (q0 + q3));
}

/// O(q) = D^(1/2|1/2)(u(q)), written out in closed form. Column 3 is q/q0 and
/// the time row/column are trivial.
[[nodiscard]] inline LorentzMatrix witt_rotation_so3(const LightlikeMomentum& q,
                                                     double chart_tol = default_chart_tol) {
  detail::require_chart(q, chart_tol);
  const double q0 = q.energy();
  const double q1 = q.space().x(), q2 = q.space().y(), q3 = q.space().z();
  const double d = q0 * (q0 + q3);
  LorentzMatrix o;
  // clang-format off
  o << 1.0, 0.0,               0.0,               0.0,
       0.0, 1.0 - q1 * q1 / d, -q1 * q2 / d,      q1 / q0,
       0.0, -q1 * q2 / d,      1.0 - q2 * q2 / d, q2 / q0,
       0.0, -q1 / q0,          -q2 / q0,          q3 / q0;
  // clang-format on
  return o;
}

/// w: Witt basis -> Sylvester basis. Column 0 is (1,0,0,1)/sqrt2 and column 3
/// is (-1,0,0,1)/sqrt2; w^T eta w = iota.
[[nodiscard]] inline LorentzMatrix witt_basis_change() {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  LorentzMatrix w;
  // clang-format off
  w << r,   0.0, 0.0, -r,
       0.0, 1.0, 0.0, 0.0,
       0.0, 0.0, 1.0, 0.0,
       r,   0.0, 0.0, r;
  // clang-format on
  return w;
}

/// H(q) = O(q) w in closed form: H iota H^T = eta, H^T eta H = iota, and
/// column 0 is q / (sqrt2 q0).
[[nodiscard]] inline LorentzMatrix sylvester_witt(const LightlikeMomentum& q, double chart_tol = default_chart_tol) {
  detail::require_chart(q, chart_tol);
  const double q0 = q.energy();
  const double q1 = q.space().x(), q2 = q.space().y(), q3 = q.space().z();
  const double a = q0 + q3;
  const double r = std::numbers::sqrt2 / 2.0;
  LorentzMatrix h;
  // clang-format off
  h << q0 * r, 0.0,                 0.0,                 -q0 * r,
       q1 * r, q0 - q1 * q1 / a,    -q1 * q2 / a,        q1 * r,
       q2 * r, -q1 * q2 / a,        q0 - q2 * q2 / a,    q2 * r,
       q3 * r, -q1,                 -q2,                 q3 * r;
  // clang-format on
  return h / q0;
}

}  // namespace sylwitt
