#pragma once

// Time representations: the compact U(1) oscillator blocks, the
// nondecomposable indefinite U(1,1) representation, the two-position
// mechanical model and the delta/delta' regularization that links them to
// energy distributions.

#include "sylwitt/linalg.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace sylwitt {

/// Harmonic oscillator with mass M and spring constant k (kM > 0).
struct OscillatorParams {
  double mass;
  double spring;

  OscillatorParams(double m, double k) : mass(m), spring(k) {
    if (!(m * k > 0.0)) throw DomainError("oscillator requires kM > 0");
  }

  /// omega^2 = k/M.
  [[nodiscard]] double omega() const { return std::sqrt(spring / mass); }
  /// l^4 = 1/(kM) = omega^2/k^2.
  [[nodiscard]] double length4() const { return 1.0 / (spring * mass); }
};

/// Two coupled positions (x, x') with masses M, M' (MM' > 0) and coupling k.
struct TwoPositionParams {
  double mass;
  double mass_prime;
  double spring;

  TwoPositionParams(double m, double mp, double k) : mass(m), mass_prime(mp), spring(k) {
    if (!(m * mp > 0.0)) throw DomainError("two-position model requires MM' > 0");
  }

  /// omega = k / M_0: k / sqrt(MM') for positive masses. For negative masses
  /// H(-M,-M') = -H(M,M'), so the frequency changes sign with M_0.
  [[nodiscard]] double omega() const { return spring / m0(); }
  /// M_0 = sign(M) sqrt(MM').
  [[nodiscard]] double m0() const { return std::copysign(std::sqrt(mass * mass_prime), mass); }
};

/// The (omega, M_0) pair of the U(1,1) time representation.
struct IndefiniteRepParams {
  double omega;
  double m0;

  IndefiniteRepParams(double w, double m0_) : omega(w), m0(m0_) {
    if (m0 == 0.0 || !std::isfinite(m0)) throw DomainError("U(1,1) representation requires M_0 != 0");
  }
};

/// e^{i omega t}.
[[nodiscard]] inline complex u1_phase(double t, double omega) { return std::polar(1.0, omega * t); }

/// R(t) = e^{i omega t} [[1, i t/M_0], [0, 1]] acting on the (bad, good) pair.
[[nodiscard]] inline SpinorMatrix u11_matrix(double t, const IndefiniteRepParams& p) {
  SpinorMatrix r;
  r << 1.0, I * (t / p.m0), 0.0, 1.0;
  return u1_phase(t, p.omega) * r;
}

/// The indefinite form J = [[0,1],[1,0]] preserved by R(t): R^dagger J R = J.
[[nodiscard]] inline SpinorMatrix u11_metric() {
  SpinorMatrix j;
  j << 0.0, 1.0, 1.0, 0.0;
  return j;
}

/// G = i [[omega, 1/M_0], [0, omega]] with R(t) = exp(t G). The semisimple
/// part is i omega 1 and the nilpotent part N = G - i omega 1 squares to 0.
[[nodiscard]] inline SpinorMatrix u11_generator(const IndefiniteRepParams& p) {
  SpinorMatrix g;
  g << p.omega, 1.0 / p.m0, 0.0, p.omega;
  return I * g;
}

/// Nilpotent part of the U(1,1) generator.
[[nodiscard]] inline SpinorMatrix u11_nilpotent(const IndefiniteRepParams& p) {
  return u11_generator(p) - I * p.omega * SpinorMatrix::Identity();
}

enum class OscillatorVariant {
  /// Time-ordered commutators [[ip,x],[x,x];[p,p],[x,-ip]].
  commutator,
  /// Fock-state anticommutator expectation values.
  fock,
};

/// 2x2 oscillator kernel. Both variants solve (d^2/dt^2 + omega^2) K = 0.
[[nodiscard]] inline SpinorMatrix oscillator_kernel(double t, const OscillatorParams& p, OscillatorVariant variant) {
  const double w = p.omega();
  const double ratio = w / p.spring;  // omega/k = l^2
  const double c = std::cos(w * t), s = std::sin(w * t);
  SpinorMatrix k;
  if (variant == OscillatorVariant::commutator) {
    k << c, ratio * I * s, I * s / ratio, c;
  } else {
    k << I * s, ratio * c, c / ratio, I * s;
  }
  return k;
}

/// Time-dependent commutator matrix of the two-position model. The lower-left
/// 2x2 block vanishes identically; the upper-right block carries the t sin,
/// t cos dipole terms. The t sin entries carry 1/M_0 (1/sqrt(MM') for positive
/// masses), which keeps K(-M,-M')(t) = K(M,M')(-t).
[[nodiscard]] inline Mat4c two_position_kernel(double t, const TwoPositionParams& p) {
  const double m = p.mass, mp = p.mass_prime;
  const double w = p.omega();
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double m0 = p.m0();
  const double up = std::sqrt(mp / m), down = std::sqrt(m / mp);
  Mat4c k;
  // clang-format off
  k << c,          I * up * s,   -t / m0 * s, I * t / m * c,
       I * down * s, c,          I * t / mp * c, -t / m0 * s,
       0.0,        0.0,          c,             I * up * s,
       0.0,        0.0,          I * down * s,  c;
  // clang-format on
  return k;
}

/// The same kernel built as [[1, (1/M_0) d/domega], [0, 1]] (x) B(t), where
/// B(t) is the compact 2x2 block and d/domega acts on its omega dependence
/// (d/domega cos wt = -t sin wt, d/domega sin wt = t cos wt).
[[nodiscard]] inline Mat4c two_position_kernel_tensor(double t, const TwoPositionParams& p) {
  const double m = p.mass, mp = p.mass_prime;
  const double w = p.omega();
  const double up = std::sqrt(mp / m), down = std::sqrt(m / mp);
  const double c = std::cos(w * t), s = std::sin(w * t);
  SpinorMatrix block, d_block;
  block << c, I * up * s, I * down * s, c;
  d_block << -t * s, I * up * t * c, I * down * t * c, -t * s;

  Eigen::Matrix2d nil_factor;
  nil_factor << 1.0, 1.0 / p.m0(), 0.0, 1.0;

  Mat4c out = Mat4c::Zero();
  for (int r = 0; r < 2; ++r) {
    for (int c2 = 0; c2 < 2; ++c2) {
      if (nil_factor(r, c2) == 0.0) continue;
      // the off-diagonal factor carries the derivative, the diagonal the block itself
      out.block<2, 2>(2 * r, 2 * c2) = nil_factor(r, c2) * (r == c2 ? block : d_block);
    }
  }
  return out;
}

/// Symmetric 4x4 Q with H = z^T Q z, z = (x, p, x', p'), for the Hamiltonian
/// of the two-position Lagrangian:
///   H = p^2/2M + p'^2/2M' + k (x p'/M' - x' p/M).
[[nodiscard]] inline Eigen::Matrix4d two_position_hamiltonian_form(const TwoPositionParams& p) {
  const double m = p.mass, mp = p.mass_prime, k = p.spring;
  Eigen::Matrix4d q = Eigen::Matrix4d::Zero();
  q(1, 1) = 0.5 / m;
  q(3, 3) = 0.5 / mp;
  q(0, 3) = q(3, 0) = 0.5 * k / mp;
  q(2, 1) = q(1, 2) = -0.5 * k / m;
  return q;
}

/// The same Hamiltonian in the semisimple + nilpotent split
///   H = omega (sqrt(M/M') x p' - sqrt(M'/M) x' p)
///     + (1/M_0) (sqrt(M'/M) p^2/2 + sqrt(M/M') p'^2/2).
/// The second momentum coefficient is sqrt(M/M'); that is what the equations
/// of motion require.
[[nodiscard]] inline Eigen::Matrix4d two_position_split_hamiltonian_form(const TwoPositionParams& p) {
  const double m = p.mass, mp = p.mass_prime;
  const double w = p.omega(), inv_m0 = 1.0 / p.m0();
  const double up = std::sqrt(mp / m), down = std::sqrt(m / mp);
  Eigen::Matrix4d q = Eigen::Matrix4d::Zero();
  q(0, 3) = q(3, 0) = 0.5 * w * down;
  q(2, 1) = q(1, 2) = -0.5 * w * up;
  q(1, 1) = 0.5 * inv_m0 * up;
  q(3, 3) = 0.5 * inv_m0 * down;
  return q;
}

/// T with (x, p, x', p')^T = T (b, b^x, g, g^x)^T: the indefinite unitary
/// harmonic expansion of the two-position model.
[[nodiscard]] inline Mat4c two_position_normal_modes(const TwoPositionParams& p) {
  const double m = p.mass, mp = p.mass_prime, m0 = p.m0();
  const double r = std::numbers::sqrt2 / 2.0;
  const double cx = r * std::sqrt(m0 / m), cp = r * std::sqrt(m / m0);
  const double cxp = r * std::sqrt(m0 / mp), cpp = r * std::sqrt(mp / m0);
  Mat4c t = Mat4c::Zero();
  t(0, 0) = cx;
  t(0, 1) = cx;
  t(1, 2) = I * cp;
  t(1, 3) = -I * cp;
  t(2, 0) = -I * cxp;
  t(2, 1) = I * cxp;
  t(3, 2) = cpp;
  t(3, 3) = cpp;
  return t;
}

/// Symmetric N with H = n^T N n, n = (b, b^x, g, g^x), for
///   H = omega (b g^x + g b^x) + g g^x / M_0.
[[nodiscard]] inline Mat4c u11_hamiltonian_form(const IndefiniteRepParams& p) {
  Mat4c n = Mat4c::Zero();
  n(0, 3) = n(3, 0) = 0.5 * p.omega;
  n(1, 2) = n(2, 1) = 0.5 * p.omega;
  n(2, 3) = n(3, 2) = 0.5 / p.m0;
  return n;
}

/// Quadrature did not reach the requested accuracy.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  [[nodiscard]] double estimate() const { return estimate_; }
  [[nodiscard]] double error_estimate() const { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// Half-width of the q0 integration window around E.
inline constexpr double regularization_window = 200.0;

struct RegularizedDelta {
  complex value;
  /// Sum of the adaptive quadrature error estimates over all panels.
  double quadrature_error;
  /// Bound on the magnitude of the integrand outside [E-L, E+L].
  double tail_bound;
  double window;
};

/// int dq0 e^{i t q0} Re[(i/pi) (E + i eps - q0)^{-(order+1)}] over
/// [E - L, E + L]. Converges to e^{itE} (order 0) or -i t e^{itE} (order 1) as
/// eps -> 0.
///
/// Shifting u = q0 - E makes the order-0 kernel an even Lorentzian and the
/// order-1 kernel odd, so each reduces to one real half-line integral.
[[nodiscard]] inline RegularizedDelta regularized_delta(double t, double energy, double eps, int order,
                                                        double window = regularization_window) {
  if (!(eps > 0.0)) throw DomainError("regularized_delta requires eps > 0");
  if (!(t >= 0.0)) throw DomainError("regularized_delta requires t >= 0");
  if (order != 0 && order != 1) throw DomainError("regularized_delta order must be 0 or 1");
  if (!(window > 0.0)) throw DomainError("regularized_delta window must be positive");

  const double pi = std::numbers::pi;
  auto integrand = [&](double u) {
    const double d = u * u + eps * eps;
    if (order == 0) return 2.0 * std::cos(t * u) * eps / (pi * d);
    return -4.0 * eps / pi * std::sin(t * u) * u / (d * d);
  };

  // Panels resolve the peak of width eps before the oscillatory tail.
  std::vector<double> breaks{0.0};
  for (double b = eps; b < window; b *= 10.0) breaks.push_back(b);
  breaks.push_back(window);

  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  double total = 0.0, error = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double panel_error = 0.0, panel_l1 = 0.0;
    total += Quad::integrate(integrand, breaks[i], breaks[i + 1], 25, 1e-12, &panel_error, &panel_l1);
    error += panel_error;
    l1 += panel_l1;
  }

  if (!std::isfinite(total) || error > 1e-8 * std::max(1.0, l1)) {
    std::ostringstream msg;
    msg << "regularized_delta did not converge: t=" << t << " E=" << energy << " eps=" << eps
        << " order=" << order << " estimate=" << total << " error=" << error << " L1=" << l1;
    throw QuadratureError(msg.str(), total, error);
  }

  const double tail = order == 0 ? 2.0 * eps / (pi * window) : 2.0 * eps / (pi * window * window);
  const complex phase = u1_phase(t, energy);
  const complex value = order == 0 ? phase * total : phase * (I * total);
  return {value, error, tail, window};
}

/// The distributional targets: e^{itE} for delta, -i t e^{itE} for delta'.
[[nodiscard]] inline complex delta_target(double t, double energy, int order) {
  return order == 0 ? u1_phase(t, energy) : -I * t * u1_phase(t, energy);
}

}  // namespace sylwitt
