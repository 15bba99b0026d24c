#pragma once

// Randomized verification suite: every module's invariants as named checks,
// run with per-check random streams and rendered as JSON, CSV or text.

#include "sylwitt/electroweak.hpp"
#include "sylwitt/finite_difference.hpp"
#include "sylwitt/kernels.hpp"
#include "sylwitt/minkowski.hpp"
#include "sylwitt/sampling.hpp"
#include "sylwitt/time_reps.hpp"
#include "sylwitt/transmutators.hpp"

#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sylwitt {

enum class OutputFormat { json, csv, text };

struct VerifyConfig {
  std::uint64_t seed = 42;
  /// Random draws per property; expensive checks use a fixed fraction.
  int cases = 1000;
  /// Replaces every floating-point check's tolerance when set.
  std::optional<Tolerance> tolerance;
  OutputFormat format = OutputFormat::json;
  /// Include wall-clock times in the report (breaks byte-level determinism).
  bool timings = false;
  bool parallel = true;
};

/// What one check measured.
struct CheckOutcome {
  double max_residual = 0.0;
  /// Reference magnitude for the relative part of the tolerance.
  double scale = 0.0;
  int cases = 0;
  std::string parameters;
};

struct CheckSpec {
  std::string name;
  std::string description;
  Tolerance tolerance;
  /// Counting checks (labels, monotonicity) whose tolerance is not a float
  /// bound and is never overridden.
  bool exact = false;
  std::function<CheckOutcome(Rng&, int cases)> run;
};

struct CheckReport {
  std::string name;
  std::string description;
  std::string parameters;
  int cases = 0;
  double max_residual = 0.0;
  double scale = 0.0;
  Tolerance tolerance;
  double bound = 0.0;
  bool pass = false;
  double elapsed_seconds = 0.0;
  std::optional<std::string> error;
};

struct VerifyResult {
  std::vector<CheckReport> reports;
  int exit_code = 0;

  [[nodiscard]] bool all_pass() const { return exit_code == 0; }
};

namespace checks {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline int fraction(int cases, int divisor) { return std::max(1, cases / divisor); }

inline std::string describe(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += "; ";
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

inline double random_mass_sign(Rng& rng, double lo, double hi) {
  const double m = uniform(rng, lo, hi);
  return uniform(rng, 0.0, 1.0) < 0.5 ? -m : m;
}

/// Largest relative FD residual of (d^2 + w^2) (pole) or its square over
/// every entry of a matrix function.
inline double annihilation_residual(const std::function<MatXc(double)>& f, Eigen::Index rows, Eigen::Index cols,
                                    double w, bool dipole) {
  const OdeOrderTable t = ode_order_check(f, rows, cols, std::abs(w));
  const auto& r = dipole ? t.dipole_residual : t.pole_residual;
  return *std::ranges::max_element(r);
}

// --- minkowski ------------------------------------------------------------

inline CheckOutcome witt_congruence(Rng&, int) {
  const LorentzMatrix w = witt_basis_change();
  const double r = max_diff(w.transpose() * MetricForm::sylvester().matrix * w, MetricForm::witt().matrix);
  return {r, 1.0, 1, "fixed"};
}

inline CheckOutcome slash_determinant(Rng& rng, int n) {
  double res = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const FourVector q(uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10));
    const double ref = inner(q, q);
    for (bool bar : {false, true}) res = std::max(res, std::abs(slash(q, bar).determinant() - ref));
    scale = std::max(scale, q.vector().squaredNorm());
  }
  return {res, scale, n, "q^k uniform in [-10,10]"};
}

inline CheckOutcome vector_rep_homomorphism(Rng& rng, int n) {
  double res = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const SpinorMatrix a = random_sl2c(rng), b = random_sl2c(rng);
    const LorentzMatrix la = vector_rep(a), lb = vector_rep(b);
    res = std::max(res, max_diff(vector_rep(a * b), la * lb));
    scale = std::max(scale, max_abs(la) * max_abs(lb));
  }
  return {res, scale, n, "s = exp(A), A traceless, entries in [-1,1]+i[-1,1]"};
}

inline CheckOutcome vector_rep_double_cover(Rng& rng, int n) {
  double res = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const SpinorMatrix s = random_sl2c(rng);
    const LorentzMatrix l = vector_rep(s);
    res = std::max(res, max_diff(l, vector_rep(SpinorMatrix(-s))));
    scale = std::max(scale, max_abs(l));
  }
  return {res, scale, n, "s = exp(A), A traceless"};
}

inline CheckOutcome vector_rep_slash(Rng& rng, int n) {
  double res = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const SpinorMatrix s = random_sl2c(rng);
    const FourVector x(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
    const FourVector lx(vector_rep(s) * x.vector());
    const SpinorMatrix lhs = s * slash(x) * s.adjoint();
    res = std::max(res, max_diff(lhs, slash(lx)));
    scale = std::max(scale, max_abs(lhs));
  }
  return {res, scale, n, "s = exp(A); x^k in [-1,1]"};
}

// --- transmutators ----------------------------------------------------------

inline const char* massive_params = "m in [0.1,10]; |q| <= 10 m; isotropic";

inline CheckOutcome lorentz_boost_group(Rng& rng, int n) {
  const LorentzMatrix& eta = MetricForm::sylvester().matrix;
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const MassiveMomentum p = random_massive(rng);
    const LorentzMatrix l = lorentz_boost(p);
    res = std::max(res, max_diff(l.transpose() * eta * l, eta));
    res = std::max(res, std::abs(l.determinant() - 1.0));
    res = std::max(res, max_diff(l * Vec4(p.mass(), 0, 0, 0), p.four().vector()) / p.mass());
    res = std::max(res, max_diff(l, vector_rep(weyl_boost(p))));
    if (!(l(0, 0) >= 1.0)) res = inf;
  }
  return {res, scale, n, massive_params};
}

inline CheckOutcome weyl_boost_properties(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const MassiveMomentum p = random_massive(rng);
    const SpinorMatrix s = weyl_boost(p);
    res = std::max(res, max_diff(s, s.adjoint()));
    res = std::max(res, std::abs(s.determinant() - 1.0));
    res = std::max(res, max_diff(s * s.adjoint(), slash(p.four()) / p.mass()) / (p.energy() / p.mass()));
    res = std::max(res, max_diff(weyl_boost_inverse(p) * s, SpinorMatrix::Identity()));
    const Eigen::SelfAdjointEigenSolver<SpinorMatrix> eig(s);
    if (!(eig.eigenvalues().minCoeff() > 0.0)) res = inf;
  }
  return {res, 1.0, n, massive_params};
}

inline CheckOutcome spin1_projector_check(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const MassiveMomentum p = random_massive(rng);
    const LorentzMatrix mixed = spin1_projector_mixed(p);
    const double size = std::max(1.0, max_abs(mixed));
    res = std::max(res, max_diff(mixed * mixed, mixed) / (size * size));
    res = std::max(res, std::abs(mixed.trace() - 3.0));
    res = std::max(res, max_abs(mixed * p.four().vector()) / (size * p.energy()));
    const LorentzMatrix l = lorentz_boost(p);
    const LorentzMatrix via_boost = l * Vec4(0, 1, 1, 1).asDiagonal() * l.transpose();
    res = std::max(res, max_diff(via_boost, spin1_projector(p)) / (size * size));
  }
  return {res, 1.0, n, massive_params};
}

inline CheckOutcome helicity_projector_check(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto [pp, pm] = helicity_projectors(LightlikeMomentum(uniform(rng, 0.1, 10) * random_direction(rng)));
    res = std::max(res, max_diff(pp * pp, pp));
    res = std::max(res, max_diff(pm * pm, pm));
    res = std::max(res, max_abs(pp * pm));
    res = std::max(res, max_abs(pm * pp));
    res = std::max(res, std::abs(pp.trace() - 1.0));
    res = std::max(res, std::abs(pm.trace() - 1.0));
    res = std::max(res, max_diff(pp + pm, SpinorMatrix::Identity()));
  }
  return {res, 1.0, n, "|q| in [0.1,10]; isotropic"};
}

inline const char* lightlike_params = "|q| in [0.1,10]; direction with q^3/|q| >= -0.99";

inline CheckOutcome witt_rotation_su2_check(Rng& rng, int n) {
  SpinorMatrix up, down;
  up << 1, 0, 0, 0;
  down << 0, 0, 0, 1;
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const LightlikeMomentum q = random_lightlike(rng);
    const SpinorMatrix u = witt_rotation_su2(q);
    const auto [pp, pm] = helicity_projectors(q);
    res = std::max(res, max_diff(u * u.adjoint(), SpinorMatrix::Identity()));
    res = std::max(res, std::abs(u.determinant() - 1.0));
    res = std::max(res, max_diff(u * up * u.adjoint(), pp));
    res = std::max(res, max_diff(u * down * u.adjoint(), pm));
  }
  return {res, 1.0, n, lightlike_params};
}

inline CheckOutcome witt_rotation_so3_check(Rng& rng, int n) {
  const LorentzMatrix& eta = MetricForm::sylvester().matrix;
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const LightlikeMomentum q = random_lightlike(rng);
    const LorentzMatrix o = witt_rotation_so3(q);
    res = std::max(res, max_diff(o, vector_rep(witt_rotation_su2(q))));
    res = std::max(res, max_diff(o.transpose() * eta * o, eta));
    res = std::max(res, std::abs(o.determinant() - 1.0));
    res = std::max(res, max_diff(o * Vec4(1, 0, 0, 1), q.four().vector() / q.energy()));
  }
  return {res, 1.0, n, lightlike_params};
}

inline CheckOutcome sylvester_witt_check(Rng& rng, int n) {
  const LorentzMatrix& eta = MetricForm::sylvester().matrix;
  const LorentzMatrix& iota = MetricForm::witt().matrix;
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const LightlikeMomentum q = random_lightlike(rng);
    const LorentzMatrix h = sylvester_witt(q);
    res = std::max(res, max_diff(h * iota * h.transpose(), eta));
    res = std::max(res, max_diff(h.transpose() * eta * h, iota));
    res = std::max(res, max_diff(h, witt_rotation_so3(q) * witt_basis_change()));
  }
  return {res, 1.0, n, lightlike_params};
}

inline CheckOutcome massless_limit(Rng& rng, int n) {
  double worst_final = 0.0;
  int violations = 0;
  for (int i = 0; i < n; ++i) {
    const Vec3 q = uniform(rng, 0.5, 5.0) * random_direction(rng);
    const SpinorMatrix target = helicity_projectors(LightlikeMomentum(q)).first;
    double previous = inf, last = 0.0;
    for (int e = 1; e <= 6; ++e) {
      const MassiveMomentum p(std::pow(10.0, -e), q);
      last = (std::sqrt(p.mass() / (2.0 * p.energy())) * weyl_boost(p) - target).norm();
      if (!(last < previous)) ++violations;
      previous = last;
    }
    worst_final = std::max(worst_final, last);
  }
  return {violations > 0 ? inf : worst_final, 0.0, n,
          describe({{"|q|", "[0.5,5]"}, {"m", "1e-1..1e-6"}, {"monotone_violations", std::to_string(violations)}})};
}

inline CheckOutcome chart_equivariance(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const LightlikeMomentum q = random_lightlike(rng);
    const double phi = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(phi, Vec3::UnitZ()).toRotationMatrix();
    const LightlikeMomentum rq(rot * q.space());
    SpinorMatrix d = SpinorMatrix::Zero();
    d(0, 0) = std::polar(1.0, -phi / 2.0);
    d(1, 1) = std::polar(1.0, phi / 2.0);
    const auto [pp, pm] = helicity_projectors(q);
    const auto [rp, rm] = helicity_projectors(rq);
    res = std::max(res, max_diff(rp, d * pp * d.adjoint()));
    res = std::max(res, max_diff(rm, d * pm * d.adjoint()));
    // u(Rq)^dagger D u(q) must be a diagonal U(1) phase
    const SpinorMatrix phase = witt_rotation_su2(rq).adjoint() * d * witt_rotation_su2(q);
    res = std::max(res, std::max(std::abs(phase(0, 1)), std::abs(phase(1, 0))));
    res = std::max(res, std::abs(std::abs(phase(0, 0)) - 1.0));
  }
  return {res, 1.0, n, std::string(lightlike_params) + "; phi in [-pi,pi]"};
}

// --- time_reps ----------------------------------------------------------------

inline const char* u11_params = "t,s,omega in [-5,5]; |M0| in [0.2,5], random sign";

inline IndefiniteRepParams random_u11(Rng& rng) {
  const double w = uniform(rng, -5, 5);
  return {w, random_mass_sign(rng, 0.2, 5.0)};
}

inline CheckOutcome u1_group_law(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = uniform(rng, -5, 5), s = uniform(rng, -5, 5), w = uniform(rng, -5, 5);
    res = std::max(res, std::abs(u1_phase(t, w) * u1_phase(s, w) - u1_phase(t + s, w)));
    res = std::max(res, std::abs(std::abs(u1_phase(t, w)) - 1.0));
  }
  return {res, 1.0, n, "t,s,omega in [-5,5]"};
}

inline CheckOutcome u11_group_law(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const IndefiniteRepParams p = random_u11(rng);
    const double t = uniform(rng, -5, 5), s = uniform(rng, -5, 5);
    const SpinorMatrix rt = u11_matrix(t, p), rs = u11_matrix(s, p);
    res = std::max(res, max_diff(rt * rs, u11_matrix(t + s, p)));
    scale = std::max(scale, max_abs(rt) * max_abs(rs));
  }
  return {res, scale, n, u11_params};
}

inline CheckOutcome u11_unitarity(Rng& rng, int n) {
  const SpinorMatrix j = u11_metric();
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const IndefiniteRepParams p = random_u11(rng);
    const SpinorMatrix r = u11_matrix(uniform(rng, -5, 5), p);
    res = std::max(res, max_diff(r.adjoint() * j * r, j));
    scale = std::max(scale, max_abs(r) * max_abs(r));
  }
  return {res, scale, n, u11_params};
}

inline CheckOutcome u11_generator_trace(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const IndefiniteRepParams p = random_u11(rng);
    const SpinorMatrix g = u11_generator(p);
    res = std::max(res, std::abs(0.5 * (-I * g).trace() - complex(p.omega)));
    const SpinorMatrix nil = u11_nilpotent(p);
    res = std::max(res, max_abs(nil * nil));
  }
  return {res, 0.0, n, u11_params};
}

inline CheckOutcome u11_exponential(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const IndefiniteRepParams p = random_u11(rng);
    const double t = uniform(rng, -5, 5);
    const SpinorMatrix g = u11_generator(p);
    const SpinorMatrix e = (t * g).exp();
    res = std::max(res, max_diff(e, u11_matrix(t, p)));
    scale = std::max(scale, max_abs(e));
  }
  return {res, scale, n, u11_params + std::string("; oracle: Pade matrix exponential")};
}

inline CheckOutcome oscillator_determinant(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = random_mass_sign(rng, 0.2, 5.0);
    const OscillatorParams p(m, std::copysign(uniform(rng, 0.2, 5.0), m));
    res = std::max(res, std::abs(oscillator_kernel(uniform(rng, -10, 10), p, OscillatorVariant::commutator).determinant() - 1.0));
  }
  return {res, 0.0, n, "|M|,|k| in [0.2,5], kM > 0; t in [-10,10]"};
}

inline CheckOutcome oscillator_pole(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = random_mass_sign(rng, 0.2, 5.0);
    const OscillatorParams p(m, std::copysign(uniform(rng, 0.2, 5.0), m));
    for (auto v : {OscillatorVariant::commutator, OscillatorVariant::fock}) {
      auto f = [&](double t) -> MatXc { return oscillator_kernel(t, p, v); };
      res = std::max(res, annihilation_residual(f, 2, 2, p.omega(), false));
    }
  }
  return {res, 0.0, n, "|M|,|k| in [0.2,5], kM > 0; both variants"};
}

inline TwoPositionParams random_two_position(Rng& rng) {
  const double m = random_mass_sign(rng, 0.2, 5.0);
  return {m, std::copysign(uniform(rng, 0.2, 5.0), m), uniform(rng, 0.2, 5.0)};
}

inline CheckOutcome two_position_tensor(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const TwoPositionParams p = random_two_position(rng);
    const double t = uniform(rng, -10, 10);
    const Mat4c k = two_position_kernel(t, p);
    res = std::max(res, max_diff(k, two_position_kernel_tensor(t, p)));
    res = std::max(res, max_abs(k.block<2, 2>(2, 0)));
    const TwoPositionParams reversed(-p.mass, -p.mass_prime, p.spring);
    res = std::max(res, max_diff(two_position_kernel(-t, reversed), k));
    scale = std::max(scale, max_abs(k));
  }
  return {res, scale, n, "|M|,|M'| in [0.2,5], same sign; k in [0.2,5]; t in [-10,10]; K(-M,-M')(-t) = K(M,M')(t)"};
}

inline CheckOutcome two_position_dipole(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const TwoPositionParams p = random_two_position(rng);
    auto f = [&](double t) -> MatXc { return two_position_kernel(t, p); };
    res = std::max(res, annihilation_residual(f, 4, 4, p.omega(), true));
  }
  return {res, 0.0, n, "|M|,|M'| in [0.2,5], same sign; k in [0.2,5]; (d^2+w^2)^2 by FD"};
}

inline CheckOutcome two_position_hamiltonian(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const TwoPositionParams p = random_two_position(rng);
    const Eigen::Matrix4d q = two_position_hamiltonian_form(p);
    res = std::max(res, max_diff(q, two_position_split_hamiltonian_form(p)));
    const Mat4c t = two_position_normal_modes(p);
    const Mat4c n_form = u11_hamiltonian_form(IndefiniteRepParams(p.omega(), p.m0()));
    res = std::max(res, max_diff(t.transpose() * q.cast<complex>() * t, n_form));
    scale = std::max(scale, max_abs(q));
  }
  return {res, scale, n, "|M|,|M'| in [0.2,5], same sign; k in [0.2,5]"};
}

inline CheckOutcome delta_regularization(Rng&, int) {
  const std::vector<double> ts{0.1, 0.25, 0.5, 1.0, 2.0};
  const std::vector<double> es{-5.0, -2.0, -1.0, -0.3, 0.0, 0.7, 1.5, 2.5, 5.0};
  double worst = 0.0;
  int points = 0, violations = 0;
  for (int order : {0, 1}) {
    for (double t : ts) {
      for (double e : es) {
        if (std::abs(t * e) > 5.0) continue;
        ++points;
        double previous = inf, last = 0.0;
        for (double eps : {1e-1, 1e-2, 1e-3}) {
          last = std::abs(regularized_delta(t, e, eps, order).value - delta_target(t, e, order));
          if (!(last < previous)) ++violations;
          previous = last;
        }
        worst = std::max(worst, last);
      }
    }
  }
  return {violations > 0 ? inf : worst, 0.0, points,
          describe({{"grid", "t in {0.1..2}, E in {-5..5}, |tE| <= 5, orders 0 and 1"},
                    {"eps", "1e-1,1e-2,1e-3"},
                    {"monotone_violations", std::to_string(violations)}})};
}

// --- kernels --------------------------------------------------------------------

inline GaugeTriple random_gauge(Rng& rng) {
  const double mu2 = uniform(rng, 0.2, 5.0);
  for (;;) {
    const double e = uniform(rng, -5.0, 5.0);
    if (std::abs(e) > 0.05 && std::abs(e + mu2) > 0.05 && std::abs(e + 3.0 * mu2) > 0.05) return {mu2, e};
  }
}

inline CheckOutcome witt_sylvester_generic(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const GaugeTriple g = random_gauge(rng);
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    const double x0 = uniform(rng, -5.0, 5.0);
    res = std::max(res, witt_sylvester_residual(x0, q, g));
    scale = std::max(scale, max_abs(massless_vector_rest_mode(x0, q, g)));
  }
  return {res, scale, n, "mu^2 in [0.2,5]; eps sigma^2 in [-5,5]; |q| in [0.2,5]; x0 in [-5,5]"};
}

inline CheckOutcome witt_sylvester_feynman(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const GaugeTriple g = GaugeTriple::feynman(uniform(rng, 0.2, 5.0));
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    res = std::max(res, witt_sylvester_residual(uniform(rng, -5.0, 5.0), q, g));
  }
  return {res, 0.0, n, "eps sigma^2 = -mu^2; mu^2 in [0.2,5]; |q| in [0.2,5]; x0 in [-5,5]"};
}

inline int count_labels(const OdeOrderTable& t, auto&& wrong) {
  int bad = 0;
  for (Eigen::Index r = 0; r < t.rows; ++r) {
    for (Eigen::Index c = 0; c < t.cols; ++c) bad += wrong(r, c, t.at(r, c)) ? 1 : 0;
  }
  return bad;
}

inline CheckOutcome dipole_classification(Rng& rng, int n) {
  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const GaugeTriple g = random_gauge(rng);
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    const double q0 = q.norm();
    bad += count_labels(ode_order_check(witt_lightlike_kernel(q0, g), q0), [](auto r, auto c, OdeOrder o) {
      return r == c ? o != OdeOrder::dipole : o != OdeOrder::pole;
    });
    for (auto v : {KernelVariant::commutator, KernelVariant::fock}) {
      bad += count_labels(ode_order_check(witt_transverse_kernel(q0, g, v), q0), [](auto r, auto c, OdeOrder o) {
        return r == c ? o != OdeOrder::pole : o != OdeOrder::zero;
      });
      const MassiveVectorParams mv(uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0));
      const Vec3 mq = uniform(rng, 0.1, 5.0) * random_direction(rng);
      const double mq0 = MassiveMomentum(mv.mass, mq).energy();
      bad += count_labels(ode_order_check(massive_vector_spin_kernel(mv, mq, v), mq0), [](auto r, auto c, OdeOrder o) {
        return r == c ? o != OdeOrder::pole : o != OdeOrder::zero;
      });
      bad += count_labels(ode_order_check(massive_vector_lorentz_kernel(mv, mq, v), mq0),
                          [](auto, auto, OdeOrder o) { return o != OdeOrder::pole; });
    }
    const GaugeTriple f = GaugeTriple::feynman(g.mu2);
    auto any_dipole = [](auto, auto, OdeOrder o) { return o == OdeOrder::dipole || o == OdeOrder::unresolved; };
    bad += count_labels(ode_order_check(witt_lightlike_kernel(q0, f), q0), any_dipole);
    bad += count_labels(ode_order_check(massless_vector_rest_kernel(q, f), q0), any_dipole);
  }
  return {static_cast<double>(bad), 0.0, n, "random generic gauge, Feynman point, massive and transverse kernels; residual = mislabeled entries"};
}

inline CheckOutcome transverse_gauge_independence(Rng& rng, int n) {
  int differing = 0;
  for (int i = 0; i < n; ++i) {
    const double mu2 = uniform(rng, 0.2, 5.0), q0 = uniform(rng, 0.1, 10.0), x0 = uniform(rng, -10, 10);
    const SpinorMatrix ref = massless_vector_witt_blocks(x0, q0, GaugeTriple(mu2, 0.5 * mu2)).transverse;
    for (double f : {-0.5, 2.0, -2.0}) {
      const SpinorMatrix other = massless_vector_witt_blocks(x0, q0, GaugeTriple(mu2, f * mu2)).transverse;
      if (!(other.array() == ref.array()).all()) ++differing;
    }
  }
  return {static_cast<double>(differing), 0.0, n, "eps sigma^2 in {+-0.5, +-2} mu^2; residual = differing blocks"};
}

inline CheckOutcome spinor_weyl_equation(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec3 q = uniform(rng, 0.1, 10.0) * random_direction(rng);
    const double x0 = uniform(rng, -5, 5);
    const SpinorMatrix gen = I * sigma_dot(q);
    for (auto v : {KernelVariant::commutator, KernelVariant::fock}) {
      auto f = [&](double x) { return massless_spinor_mode(x, q, v); };
      const double h = 0.01 / q.norm();
      res = std::max(res, max_diff(fd::first_derivative(f, x0, h), gen * f(x0)) / q.norm());
    }
    res = std::max(res, max_diff(massless_spinor_mode(0.0, q, KernelVariant::commutator), SpinorMatrix::Identity()));
  }
  return {res, 0.0, n, "|q| in [0.1,10]; x0 in [-5,5]; both variants; relative to |q|"};
}

inline CheckOutcome massive_canonical(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const MassiveVectorParams p(uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0));
    const Vec3 q = uniform(rng, 0.0, 5.0) * random_direction(rng);
    const double q0 = MassiveMomentum(p.mass, q).energy();
    auto zz = [&](double x) { return massive_vector_mode(x, p, q, KernelVariant::commutator).spin; };
    const Mat3c expected = I * q0 * p.coupling2() * Mat3c::Identity();
    res = std::max(res, max_diff(fd::first_derivative(zz, 0.0, 0.01 / q0), expected));
    scale = std::max(scale, max_abs(expected));
    const DerivedBlocks b = massive_vector_derived_blocks(0.0, p, q);
    res = std::max(res, max_diff(b[0][0], q0 * Mat3c::Identity()));
    res = std::max(res, max_abs(b[0][1]) + max_abs(b[1][0]));
  }
  return {res, scale, n, "m,lambda in [0.2,5]; |q| in [0,5]"};
}

inline CheckOutcome massive_derived_blocks(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const MassiveVectorParams p(uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0));
    const Vec3 q = uniform(rng, 0.0, 5.0) * random_direction(rng);
    const double q0 = MassiveMomentum(p.mass, q).energy(), g2 = p.coupling2(), x0 = uniform(rng, -5, 5);
    auto zz = [&](double x) { return massive_vector_mode(x, p, q, KernelVariant::commutator).spin; };
    const double h = 0.01 / q0;
    const DerivedBlocks b = massive_vector_derived_blocks(x0, p, q);
    const Mat3c dz = fd::first_derivative(zz, x0, h), ddz = fd::second_derivative(zz, x0, 5.0 * h);
    res = std::max(res, max_diff(b[0][0], (-I * dz / g2).eval()));
    res = std::max(res, max_diff(b[1][1], b[0][0]));
    res = std::max(res, max_diff(b[0][1], zz(x0)));
    res = std::max(res, max_diff(b[1][0], (-ddz / (g2 * g2)).eval()));
    scale = std::max(scale, max_abs(b[1][0]) + max_abs(b[0][0]));
  }
  return {res, scale, n, "m,lambda in [0.2,5]; |q| in [0,5]; x0 in [-5,5]; oracle: FD of [ZZ]"};
}

inline CheckOutcome kernel_parity(Rng& rng, int n) {
  double res = 0.0, scale = 1.0;
  Mat4c swap = Mat4c::Zero();
  swap(0, 3) = swap(3, 0) = swap(1, 1) = swap(2, 2) = 1.0;
  for (int i = 0; i < n; ++i) {
    const double x0 = uniform(rng, -5, 5);
    const MassiveVectorParams mv(uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0));
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    const GaugeTriple g = random_gauge(rng);
    auto odd = [&](const auto& k_minus, const auto& k_plus) {
      res = std::max(res, max_diff(k_minus, (-k_plus.transpose()).eval()));
      scale = std::max(scale, max_abs(k_plus));
    };
    auto even = [&](const auto& k_minus, const auto& k_plus) {
      res = std::max(res, max_diff(k_minus, k_plus.transpose()));
      scale = std::max(scale, max_abs(k_plus));
    };
    using V = KernelVariant;
    const auto m_plus = massive_vector_mode(x0, mv, q, V::commutator), m_minus = massive_vector_mode(-x0, mv, q, V::commutator);
    odd(m_minus.spin, m_plus.spin);
    odd(m_minus.lorentz, m_plus.lorentz);
    const auto f_plus = massive_vector_mode(x0, mv, q, V::fock), f_minus = massive_vector_mode(-x0, mv, q, V::fock);
    even(f_minus.spin, f_plus.spin);
    even(f_minus.lorentz, f_plus.lorentz);
    // spatial reflection swaps helicities and the two lightlike Witt slots
    odd(massless_vector_rest_mode(-x0, -q, g), massless_vector_rest_mode(x0, q, g));
    const Mat4c witt_minus = witt_basis_kernel(-x0, q.norm(), g);
    odd((swap * witt_minus * swap).eval(), witt_basis_kernel(x0, q.norm(), g));
    even(massless_vector_transverse_fock(-x0, q.norm(), g), massless_vector_transverse_fock(x0, q.norm(), g));
    even(massless_spinor_mode(-x0, -q, V::commutator), massless_spinor_mode(x0, q, V::commutator).transpose().eval());
    res = std::max(res, max_diff(massless_spinor_mode(-x0, -q, V::fock), (-massless_spinor_mode(x0, q, V::fock)).eval()));
  }
  return {res, scale, n, "x0 in [-5,5]; commutators odd, Fock forms even; lightlike and spinor kernels with q -> -q"};
}

// --- electroweak ------------------------------------------------------------------

inline double relative_gap(const TriangleCouplings& a, const TriangleCouplings& b) {
  auto rel = [](double x, double y) { return std::abs(x - y) / std::abs(y); };
  return std::max({rel(a.g_y, b.g_y), rel(a.g_w, b.g_w), rel(a.g_z, b.g_z), rel(a.g_e, b.g_e),
                   rel(a.theta_w, b.theta_w)});
}

inline CheckOutcome triangle_round_trip(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    // keep clear of theta = pi/4, where (g_Z, g_e) loses first-order sensitivity
    double theta = uniform(rng, 0.05, 0.7);
    const bool complementary = uniform(rng, 0.0, 1.0) < 0.5;
    if (complementary) theta = std::numbers::pi / 2.0 - theta;
    const TriangleCouplings truth = detail::triangle_from_angle(theta, uniform(rng, 0.1, 10.0));
    const std::array<std::optional<double>, 5> values{truth.g_y, truth.g_w, truth.g_z, truth.g_e, truth.theta_w};
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = a + 1; b < 5; ++b) {
        std::array<std::optional<double>, 5> pick{};
        pick[a] = values[a];
        pick[b] = values[b];
        const TriangleInput in{pick[0], pick[1], pick[2], pick[3], pick[4]};
        const auto branch = complementary ? TriangleBranch::complementary : TriangleBranch::acute;
        res = std::max(res, relative_gap(solve_triangle(in, branch), truth));
      }
    }
  }
  return {res, 0.0, n, "theta in [0.05,0.7] or its complement; g_Z in [0.1,10]; all 10 input pairs"};
}

inline CheckOutcome scale_covariance(Rng& rng, int n) {
  double res = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const TriangleCouplings c = detail::triangle_from_angle(uniform(rng, 0.05, 1.5), uniform(rng, 0.1, 10.0));
    const double m = uniform(rng, 1.0, 500.0), a = uniform(rng, 0.1, 10.0);
    const MassSpectrum s = mass_spectrum(c, m), sa = mass_spectrum(c, a * m);
    for (auto [x, y] : {std::pair{s.m_y, sa.m_y}, {s.m_w, sa.m_w}, {s.m_z, sa.m_z}, {s.m_e, sa.m_e}}) {
      res = std::max(res, std::abs(a * x - y));
      scale = std::max(scale, std::abs(y));
    }
  }
  return {res, scale, n, "M in [1,500]; a in [0.1,10]"};
}

inline CheckOutcome identity_chain(Rng& rng, int n) {
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const TriangleCouplings c = detail::triangle_from_angle(uniform(rng, 0.05, 1.5), uniform(rng, 0.1, 10.0));
    const WeinbergRelations w = weinberg_relations(mass_spectrum(c, uniform(rng, 1.0, 500.0)));
    res = std::max(res, std::abs(w.sin2theta - 2.0 * c.g_e / c.g_z));
    res = std::max(res, std::abs(c.g_y * c.g_y + c.g_w * c.g_w - c.g_z * c.g_z) / (c.g_z * c.g_z));
    res = std::max(res, std::abs(std::tan(c.theta_w) - c.g_y / c.g_w) / (c.g_y / c.g_w));
  }
  return {res, 0.0, n, "theta in [0.05,1.5]; g_Z in [0.1,10]; M in [1,500]"};
}

inline MassSpectrum reference_spectrum() {
  constexpr double fermi = 123.0;
  const TriangleCouplings c = solve_triangle({.g_z = 91.2 / fermi, .g_e = 38.2 / fermi});
  return mass_spectrum(c, fermi);
}

inline CheckOutcome reference_masses(Rng&, int) {
  const MassSpectrum s = reference_spectrum();
  const double res = std::max(std::abs(s.m_w - 80.2), std::abs(s.m_y - 43.4));
  std::ostringstream os;
  os.precision(6);
  os << "m_Z=91.2, m_e=38.2, M=123 -> m_W=" << s.m_w << ", m_Y=" << s.m_y;
  return {res, 0.0, 1, os.str()};
}

inline CheckOutcome reference_weinberg(Rng&, int) {
  const MassSpectrum s = reference_spectrum();
  const WeinbergRelations w = weinberg_relations(s);
  const CouplingTension t = fine_structure_tension(s);
  std::ostringstream os;
  os.precision(6);
  os << "sin2theta=" << w.sin2theta << ", 1/alpha_e=" << 1.0 / w.alpha_e
     << ", g_e^2 vs 4pi/137: " << 100.0 * t.relative_difference << "%";
  return {std::abs(w.sin2theta - 0.838), 0.0, 1, os.str()};
}

}  // namespace checks

/// Every registered check, in name order.
[[nodiscard]] inline std::vector<CheckSpec> check_registry(const VerifyConfig& cfg) {
  using namespace checks;
  const int n = cfg.cases;
  auto per = [n](int divisor, auto fn) {
    return [divisor, fn, n](Rng& rng, int) { return fn(rng, fraction(n, divisor)); };
  };
  auto all = [](auto fn) { return [fn](Rng& rng, int cases) { return fn(rng, cases); }; };

  std::vector<CheckSpec> specs{
      {"electroweak.identity_chain", "sin 2theta from masses = 2 g_e/g_Z; Pythagoras; tan theta = g_Y/g_W", {1e-12}, false, all(identity_chain)},
      {"electroweak.reference_masses", "m_Z=91.2, m_e=38.2, M=123 gives m_W=80.2, m_Y=43.4 within 0.1 GeV", {0.1}, false, all(reference_masses)},
      {"electroweak.reference_weinberg", "sin 2theta_w = 0.838 within 0.001 for the reference spectrum", {1e-3}, false, all(reference_weinberg)},
      {"electroweak.scale_covariance", "mass_spectrum(c, aM) = a mass_spectrum(c, M)", {0.0, 1e-15}, false, all(scale_covariance)},
      {"electroweak.triangle_round_trip", "solve_triangle from any pair reproduces the triangle", {1e-12}, false, all(triangle_round_trip)},
      {"kernels.dipole_classification", "lightlike diagonal dipole, transverse and massive pole, no dipoles at the Feynman point", {0.0}, true, per(50, dipole_classification)},
      {"kernels.kernel_parity", "commutator kernels odd, Fock kernels even under x0 -> -x0", {0.0, 1e-12}, false, all(kernel_parity)},
      {"kernels.massive_canonical", "d/dx0 [ZZ] at 0 = i q0 m lambda; derived blocks canonical at 0", {0.0, 1e-10}, false, all(massive_canonical)},
      {"kernels.massive_derived_blocks", "derived (Z, G) blocks match derivatives of [ZZ]", {0.0, 1e-8}, false, all(massive_derived_blocks)},
      {"kernels.spinor_weyl_equation", "spinor kernels solve dK/dx0 = i sigma.q K; K(0) = 1", {1e-8}, false, all(spinor_weyl_equation)},
      {"kernels.transverse_gauge_independence", "transverse Witt block bit-identical across gauge constants", {0.0}, true, all(transverse_gauge_independence)},
      {"kernels.witt_sylvester_feynman", "Witt <-> Sylvester residual at eps sigma^2 = -mu^2", {1e-12}, false, all(witt_sylvester_feynman)},
      {"kernels.witt_sylvester_generic", "H K_witt H^T reproduces the rest-frame commutator", {1e-9}, false, all(witt_sylvester_generic)},
      {"minkowski.slash_determinant", "det slash(q) = q.q for rho and rho-bar", {0.0, 1e-10}, false, all(slash_determinant)},
      {"minkowski.vector_rep_double_cover", "vector_rep(s) = vector_rep(-s)", {0.0, 1e-15}, false, all(vector_rep_double_cover)},
      {"minkowski.vector_rep_homomorphism", "vector_rep(s1 s2) = vector_rep(s1) vector_rep(s2)", {0.0, 1e-10}, false, all(vector_rep_homomorphism)},
      {"minkowski.vector_rep_slash", "s slash(x) s^dagger = slash(vector_rep(s) x)", {0.0, 1e-10}, false, all(vector_rep_slash)},
      {"minkowski.witt_congruence", "w^T eta w = iota", {1e-14}, false, all(witt_congruence)},
      {"time_reps.delta_regularization", "delta and delta' errors decrease along eps = 1e-1,1e-2,1e-3, final < 1e-2", {1e-2}, false, all(delta_regularization)},
      {"time_reps.oscillator_determinant", "det of the oscillator commutator matrix = 1", {1e-12}, false, all(oscillator_determinant)},
      {"time_reps.oscillator_pole", "(d^2/dt^2 + omega^2) annihilates both oscillator kernels", {1e-5}, false, per(10, oscillator_pole)},
      {"time_reps.two_position_dipole", "(d^2/dt^2 + omega^2)^2 annihilates every two-position entry", {1e-5}, false, per(10, two_position_dipole)},
      {"time_reps.two_position_hamiltonian", "Lagrangian, split and normal-mode Hamiltonians agree", {0.0, 1e-12}, false, all(two_position_hamiltonian)},
      {"time_reps.two_position_tensor", "explicit two-position kernel = nilpotent tensor construction", {0.0, 1e-12}, false, all(two_position_tensor)},
      {"time_reps.u11_exponential", "exp(t G) = R(t)", {0.0, 1e-10}, false, all(u11_exponential)},
      {"time_reps.u11_generator_trace", "1/2 tr(-i G) = omega; N^2 = 0", {0.0}, false, all(u11_generator_trace)},
      {"time_reps.u11_group_law", "R(t) R(s) = R(t+s)", {0.0, 1e-12}, false, all(u11_group_law)},
      {"time_reps.u11_unitarity", "R^dagger J R = J", {0.0, 1e-12}, false, all(u11_unitarity)},
      {"time_reps.u1_group_law", "e^{i w t} e^{i w s} = e^{i w (t+s)}", {1e-12}, false, all(u1_group_law)},
      {"transmutators.chart_equivariance", "p(Rq) = D p(q) D^dagger; u(Rq)^dagger D u(q) diagonal", {1e-10}, false, all(chart_equivariance)},
      {"transmutators.helicity_projectors", "p+-^2 = p+-, p+ p- = 0, tr p+- = 1", {1e-12}, false, all(helicity_projector_check)},
      {"transmutators.lorentz_boost_group", "Lambda^T eta Lambda = eta, det 1, Lambda (m,0) = q, Lambda = vector_rep(s)", {1e-9}, false, all(lorentz_boost_group)},
      {"transmutators.massless_limit", "sqrt(m/2q0) s(q,m) -> p+(q) monotonically, final < 1e-5", {1e-5}, false, per(50, massless_limit)},
      {"transmutators.spin1_projector", "projector idempotent, trace 3, orthogonal to q, = Lambda diag(0,1,1,1) Lambda^T", {1e-10}, false, all(spin1_projector_check)},
      {"transmutators.sylvester_witt", "H iota H^T = eta, H^T eta H = iota, H = O w", {1e-10}, false, all(sylvester_witt_check)},
      {"transmutators.weyl_boost", "s hermitian, positive, det 1, s s^dagger = slash(q)/m", {1e-10}, false, all(weyl_boost_properties)},
      {"transmutators.witt_rotation_so3", "O = vector_rep(u), O in SO(1,3), O e_+ = q/q0", {1e-10}, false, all(witt_rotation_so3_check)},
      {"transmutators.witt_rotation_su2", "u unitary, det 1, u (1+-sigma3)/2 u^dagger = p+-", {1e-10}, false, all(witt_rotation_su2_check)},
  };
  std::ranges::sort(specs, {}, &CheckSpec::name);
  return specs;
}

[[nodiscard]] inline CheckReport run_check(const CheckSpec& spec, const VerifyConfig& cfg) {
  CheckReport report;
  report.name = spec.name;
  report.description = spec.description;
  report.tolerance = (cfg.tolerance && !spec.exact) ? *cfg.tolerance : spec.tolerance;

  Rng rng = stream_for(cfg.seed, spec.name);
  const auto start = std::chrono::steady_clock::now();
  try {
    const CheckOutcome out = spec.run(rng, cfg.cases);
    report.parameters = out.parameters;
    report.cases = out.cases;
    report.max_residual = out.max_residual;
    report.scale = out.scale;
  } catch (const std::exception& e) {
    report.error = e.what();
    report.max_residual = checks::inf;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.bound = report.tolerance.bound(report.scale);
  report.pass = !report.error && report.max_residual <= report.bound;
  return report;
}

[[nodiscard]] inline VerifyResult run_verify(const VerifyConfig& cfg) {
  if (cfg.cases < 1) throw DomainError("verify requires cases >= 1");
  const std::vector<CheckSpec> specs = check_registry(cfg);

  VerifyResult result;
  if (cfg.parallel) {
    std::vector<std::future<CheckReport>> jobs;
    for (const CheckSpec& spec : specs) jobs.push_back(std::async(std::launch::async, run_check, std::cref(spec), std::cref(cfg)));
    for (auto& job : jobs) result.reports.push_back(job.get());
  } else {
    for (const CheckSpec& spec : specs) result.reports.push_back(run_check(spec, cfg));
  }
  std::ranges::sort(result.reports, {}, &CheckReport::name);
  const bool ok = std::ranges::all_of(result.reports, &CheckReport::pass);
  result.exit_code = ok ? 0 : 1;
  return result;
}

// --- rendering ------------------------------------------------------------------

[[nodiscard]] inline nlohmann::ordered_json to_json(const CheckReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["description"] = r.description;
  j["parameters"] = r.parameters;
  j["cases"] = r.cases;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = {{"absolute", r.tolerance.absolute},
                    {"relative", r.tolerance.relative},
                    {"scale", r.scale},
                    {"bound", r.bound}};
  j["pass"] = r.pass;
  if (r.error) j["error"] = *r.error;
  if (timings) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline void render_report(std::ostream& os, const VerifyResult& result, const VerifyConfig& cfg) {
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["seed"] = cfg.seed;
      j["cases"] = cfg.cases;
      j["pass"] = result.all_pass();
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& r : result.reports) j["checks"].push_back(to_json(r, cfg.timings));
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      os << "name,cases,max_residual,bound,pass" << (cfg.timings ? ",elapsed_seconds" : "") << '\n';
      for (const auto& r : result.reports) {
        os << r.name << ',' << r.cases << ',' << detail::format_g17(r.max_residual) << ','
           << detail::format_g17(r.bound) << ',' << (r.pass ? "true" : "false");
        if (cfg.timings) os << ',' << detail::format_g17(r.elapsed_seconds);
        os << '\n';
      }
      break;
    }
    case OutputFormat::text: {
      for (const auto& r : result.reports) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-40s residual %.3e  bound %.3e  cases %d", r.pass ? "PASS" : "FAIL",
                      r.name.c_str(), r.max_residual, r.bound, r.cases);
        os << line;
        if (cfg.timings) os << "  " << r.elapsed_seconds << " s";
        if (r.error) os << "  error: " << *r.error;
        os << '\n';
      }
      const auto failed = std::ranges::count_if(result.reports, [](const auto& r) { return !r.pass; });
      os << result.reports.size() - static_cast<std::size_t>(failed) << '/' << result.reports.size() << " checks passed\n";
      break;
    }
  }
}

}  // namespace sylwitt
