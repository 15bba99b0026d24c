// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. An optional argument names the CLI binary for the
// byte-level determinism check.

#include "sylwitt/sylwitt.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sylwitt;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict group_identities() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = stream_for(2024, "group_identities");
  const LorentzMatrix& eta = MetricForm::sylvester().matrix;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const MassiveMomentum p = random_massive(rng);
    const LorentzMatrix l = lorentz_boost(p);
    worst = std::max(worst, max_diff(l.transpose() * eta * l, eta));
    worst = std::max(worst, std::abs(oracle::leibniz_det<double, 4>(l) - 1.0));
    worst = std::max(worst, max_diff(l * Vec4(p.mass(), 0, 0, 0), p.four().vector()));
    worst = std::max(worst, max_diff(l, vector_rep(weyl_boost(p))));
    worst = std::max(worst, max_diff(l, oracle::lorentz_from_spinor(weyl_boost(p))));
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 10.0,
          fmt("1000 momenta, m in [0.1,10], |q| <= 10m: max residual %.2e (<= 1e-9), %.3f s (< 10 s)", worst, elapsed)};
}

Verdict projector_coset() {
  Rng rng = stream_for(2024, "projector_coset");
  const LorentzMatrix& eta = MetricForm::sylvester().matrix;
  const LorentzMatrix& iota = MetricForm::witt().matrix;
  SpinorMatrix up = SpinorMatrix::Zero(), down = SpinorMatrix::Zero();
  up(0, 0) = 1.0;
  down(1, 1) = 1.0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const LightlikeMomentum q = random_lightlike(rng);
    const auto [pp, pm] = helicity_projectors(q);
    const SpinorMatrix u = witt_rotation_su2(q);
    const LorentzMatrix h = sylvester_witt(q);
    worst = std::max({worst, max_diff(pp * pp, pp), max_diff(pm * pm, pm), max_abs(pp * pm)});
    worst = std::max(worst, max_diff(u * u.adjoint(), SpinorMatrix::Identity()));
    worst = std::max({worst, max_diff(u * up * u.adjoint(), pp), max_diff(u * down * u.adjoint(), pm)});
    worst = std::max(worst, max_diff(witt_rotation_so3(q), oracle::lorentz_from_spinor(u)));
    worst = std::max(worst, max_diff(h * iota * h.transpose(), eta));
  }
  return {worst <= 1e-10, fmt("1000 chart-regular directions: max residual %.2e (<= 1e-10)", worst)};
}

Verdict massless_limit() {
  Rng rng = stream_for(2024, "massless_limit");
  double worst_final = 0.0, worst_ratio = 0.0;
  int violations = 0;
  for (int i = 0; i < 20; ++i) {
    const Vec3 q = uniform(rng, 0.5, 5.0) * random_direction(rng);
    const SpinorMatrix target = helicity_projectors(LightlikeMomentum(q)).first;
    double previous = 1e300, gap = 0.0;
    for (int e = 1; e <= 6; ++e) {
      const MassiveMomentum p(std::pow(10.0, -e), q);
      gap = (std::sqrt(p.mass() / (2.0 * p.energy())) * weyl_boost(p) - target).norm();
      if (!(gap < previous)) ++violations;
      worst_ratio = std::max(worst_ratio, gap / p.mass());
      previous = gap;
    }
    worst_final = std::max(worst_final, gap);
  }
  return {violations == 0 && worst_final < 1e-5,
          fmt("20 momenta: %d monotonicity violations, final gap %.2e (< 1e-5), empirical C = %.3f", violations,
              worst_final, worst_ratio)};
}

Verdict u11_suite() {
  Rng rng = stream_for(2024, "u11_suite");
  const SpinorMatrix j = u11_metric();
  double group = 0.0, unitary = 0.0, expo = 0.0;
  bool trace_exact = true;
  for (int i = 0; i < 1000; ++i) {
    const double t = uniform(rng, -5, 5), s = uniform(rng, -5, 5), w = uniform(rng, -5, 5);
    const double m0 = uniform(rng, 0.2, 5.0) * (uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0);
    const IndefiniteRepParams p(w, m0);
    const SpinorMatrix rt = u11_matrix(t, p);
    group = std::max(group, max_diff(rt * u11_matrix(s, p), u11_matrix(t + s, p)));
    unitary = std::max(unitary, max_diff(rt.adjoint() * j * rt, j));
    const SpinorMatrix g = u11_generator(p);
    trace_exact = trace_exact && (0.5 * (-I * g).trace() == complex(w));
    expo = std::max(expo, max_diff(oracle::taylor_exp((t * g).eval()), rt));
  }
  return {group <= 1e-12 && unitary <= 1e-12 && trace_exact && expo <= 1e-10,
          fmt("1000 draws: group law %.2e, R^dagger J R %.2e (<= 1e-12), trace exact: %s, exp(tG) %.2e (<= 1e-10)",
              group, unitary, trace_exact ? "yes" : "no", expo)};
}

Verdict two_position() {
  Rng rng = stream_for(2024, "two_position");
  double tensor = 0.0, dipole = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double sign = uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0;
    const TwoPositionParams p(sign * uniform(rng, 0.2, 5.0), sign * uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0));
    const double t = uniform(rng, -10, 10);
    tensor = std::max(tensor, max_diff(two_position_kernel(t, p), two_position_kernel_tensor(t, p)));
    const OdeOrderTable table =
        ode_order_check([&](double x) -> MatXc { return two_position_kernel(x, p); }, 4, 4, std::abs(p.omega()));
    for (double r : table.dipole_residual) dipole = std::max(dipole, r);
  }
  return {tensor <= 1e-12 && dipole <= 1e-5,
          fmt("100 draws (both mass signs): explicit vs tensor %.2e (<= 1e-12), (d^2+w^2)^2 residual %.2e (<= 1e-5)",
              tensor, dipole)};
}

Verdict witt_sylvester() {
  Rng rng = stream_for(2024, "witt_sylvester");
  double generic = 0.0, feynman = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double mu2 = uniform(rng, 0.2, 5.0);
    const double es = uniform(rng, 0.05, 5.0) * (uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0);
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    const double x0 = uniform(rng, -5, 5);
    generic = std::max(generic, witt_sylvester_residual(x0, q, GaugeTriple(mu2, es)));
    feynman = std::max(feynman, witt_sylvester_residual(x0, q, GaugeTriple::feynman(mu2)));
  }
  return {generic < 1e-9 && feynman < 1e-12,
          fmt("100 draws: generic gauge %.2e (< 1e-9), Feynman point %.2e (< 1e-12)", generic, feynman)};
}

Verdict dipole_classification() {
  Rng rng = stream_for(2024, "dipole_classification");
  int wrong = 0, dipoles_at_feynman = 0, checked = 0;
  auto tally = [&](const OdeOrderTable& t, auto expected) {
    for (Eigen::Index r = 0; r < t.rows; ++r) {
      for (Eigen::Index c = 0; c < t.cols; ++c) {
        ++checked;
        if (t.at(r, c) != expected(r, c)) ++wrong;
      }
    }
  };
  for (int i = 0; i < 10; ++i) {
    const double mu2 = uniform(rng, 0.2, 5.0);
    const GaugeTriple g(mu2, mu2 * uniform(rng, 0.1, 1.5));
    const Vec3 q = random_lightlike(rng, 0.2, 5.0).space();
    const double q0 = q.norm();
    tally(ode_order_check(witt_lightlike_kernel(q0, g), q0),
          [](auto r, auto c) { return r == c ? OdeOrder::dipole : OdeOrder::pole; });
    tally(ode_order_check(witt_transverse_kernel(q0, g), q0),
          [](auto r, auto c) { return r == c ? OdeOrder::pole : OdeOrder::zero; });
    const MassiveVectorParams mv(uniform(rng, 0.2, 5.0));
    const Vec3 mq = uniform(rng, 0.1, 5.0) * random_direction(rng);
    const double mq0 = MassiveMomentum(mv.mass, mq).energy();
    tally(ode_order_check(massive_vector_spin_kernel(mv, mq, KernelVariant::commutator), mq0),
          [](auto r, auto c) { return r == c ? OdeOrder::pole : OdeOrder::zero; });
    tally(ode_order_check(massive_vector_lorentz_kernel(mv, mq, KernelVariant::commutator), mq0),
          [](auto, auto) { return OdeOrder::pole; });
    const GaugeTriple f = GaugeTriple::feynman(mu2);
    for (const ModeKernel& k : {witt_lightlike_kernel(q0, f), witt_transverse_kernel(q0, f), massless_vector_rest_kernel(q, f)}) {
      for (OdeOrder o : ode_order_check(k, q0).labels) dipoles_at_feynman += o == OdeOrder::dipole ? 1 : 0;
    }
  }
  return {wrong == 0 && dipoles_at_feynman == 0,
          fmt("10 generic gauges: %d of %d entries mislabeled (lightlike diagonal dipole; nonzero transverse and "
              "massive entries pole; vanishing off-diagonal entries zero); %d dipoles at the Feynman point",
              wrong, checked, dipoles_at_feynman)};
}

Verdict electroweak_table() {
  const double fermi = 123.0;
  const TriangleCouplings c = solve_triangle({.g_z = 91.2 / fermi, .g_e = 38.2 / fermi});
  const MassSpectrum s = mass_spectrum(c, fermi);
  const WeinbergRelations w = weinberg_relations(s);
  const CouplingTension t = fine_structure_tension(s);
  const bool ok = std::abs(s.m_w - 80.2) <= 0.1 && std::abs(s.m_y - 43.4) <= 0.1 && std::abs(w.sin2theta - 0.838) <= 1e-3;
  return {ok, fmt("m_W = %.3f, m_Y = %.3f GeV, sin 2theta_w = %.4f; tension: g_e^2 = 4pi/%.2f vs 4pi/137 "
                  "(%+.2f%% in g_e^2, %+.2f%% in g_e; m_e from alpha = 1/137 would be %.2f GeV)",
                  s.m_w, s.m_y, w.sin2theta, t.inverse_alpha_spectrum, 100.0 * t.relative_difference,
                  100.0 * (std::sqrt(1.0 + t.relative_difference) - 1.0), t.m_e_reference)};
}

Verdict delta_regularization() {
  const auto start = std::chrono::steady_clock::now();
  int points = 0, violations = 0;
  double worst_final = 0.0, worst_oracle = 0.0;
  for (int order : {0, 1}) {
    for (double t : {0.1, 0.25, 0.5, 1.0, 2.0}) {
      for (double e : {-5.0, -2.0, -1.0, -0.3, 0.0, 0.7, 1.5, 2.5, 5.0}) {
        if (std::abs(t * e) > 5.0) continue;
        ++points;
        double previous = 1e300, err = 0.0;
        for (double eps : {1e-1, 1e-2, 1e-3}) {
          const RegularizedDelta d = regularized_delta(t, e, eps, order);
          err = std::abs(d.value - delta_target(t, e, order));
          if (!(err < previous)) ++violations;
          previous = err;
          worst_oracle = std::max(worst_oracle, std::abs(d.value - oracle::regularized_delta_closed(t, e, eps, order)) -
                                                    d.tail_bound);
        }
        worst_final = std::max(worst_final, err);
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {violations == 0 && worst_final < 1e-2 && elapsed < 30.0 && worst_oracle < 1e-8,
          fmt("%d (order, t, E) points, 0.1 <= t <= 2, |E| <= 5, |tE| <= 5: %d monotonicity violations, final error "
              "%.2e (< 1e-2), closed-form agreement %.1e, %.3f s (< 30 s)",
              points, violations, worst_final, std::max(0.0, worst_oracle), elapsed)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism(const char* cli) {
  VerifyConfig cfg;
  cfg.seed = 42;
  std::ostringstream a, b;
  render_report(a, run_verify(cfg), cfg);
  render_report(b, run_verify(cfg), cfg);
  bool ok = a.str() == b.str();
  std::string detail = fmt("in-process reports %s (%zu bytes)", ok ? "identical" : "differ", a.str().size());
  if (cli) {
    const std::string base = std::string(cli);
    const auto dir = std::filesystem::temp_directory_path();
    const std::string f1 = (dir / "sylwitt_acceptance_1.json").string(), f2 = (dir / "sylwitt_acceptance_2.json").string();
    const int r1 = std::system((base + " verify --seed 42 > " + f1).c_str());
    const int r2 = std::system((base + " verify --seed 42 > " + f2).c_str());
    const std::string s1 = slurp(f1), s2 = slurp(f2);
    std::filesystem::remove(f1);
    std::filesystem::remove(f2);
    const bool same = r1 == 0 && r2 == 0 && !s1.empty() && s1 == s2 && s1 == a.str();
    ok = ok && same;
    detail += fmt("; CLI `verify --seed 42` twice: %s", same ? "byte-identical, equal to in-process" : "MISMATCH");
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1 group identities", group_identities},
      {"AC2 projectors and coset", projector_coset},
      {"AC3 massless limit", massless_limit},
      {"AC4 U(1,1) representation", u11_suite},
      {"AC5 two-position model", two_position},
      {"AC6 Witt-Sylvester consistency", witt_sylvester},
      {"AC7 dipole classification", dipole_classification},
      {"AC8 electroweak table", electroweak_table},
      {"AC9 delta regularization", delta_regularization},
      {"AC10 determinism", [cli] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v{false, ""};
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s  %-32s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
