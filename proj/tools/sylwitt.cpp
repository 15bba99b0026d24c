// sylwitt: randomized verification and evaluation of the transmutators,
// time representations, mode kernels and the electroweak triangle.
//
// Exit codes: 0 success, 1 check failure or library error, 2 usage error.

#include "sylwitt/sylwitt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace sylwitt;
using Json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 42;
  int cases = 1000;
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
  OutputFormat format = OutputFormat::json;
};

Vec3 to_vec3(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2)}; }

template <typename Derived>
Json real_rows(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(static_cast<double>(std::real(m(r, c))));
    rows.push_back(row);
  }
  return rows;
}

template <typename Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
  if constexpr (Eigen::NumTraits<typename Derived::Scalar>::IsComplex) {
    return {{"re", real_rows(m.real())}, {"im", real_rows(m.imag())}};
  } else {
    return real_rows(m);
  }
}

/// Prints named matrices in the selected format. CSV rows are
/// name,row,col,re,im.
class MatrixPrinter {
 public:
  explicit MatrixPrinter(OutputFormat f) : format_(f) {}

  template <typename Derived>
  void add(const std::string& name, const Eigen::MatrixBase<Derived>& m) {
    const MatXc z = m.template cast<complex>();
    entries_.emplace_back(name, z);
    json_[name] = matrix_json(m);
  }

  void scalar(const std::string& name, double v) { json_[name] = v; scalars_.emplace_back(name, v); }

  void print(std::ostream& os) const {
    switch (format_) {
      case OutputFormat::json: os << json_.dump(2) << '\n'; break;
      case OutputFormat::csv:
        os << "name,row,col,re,im\n";
        for (const auto& [name, v] : scalars_) os << name << ",0,0," << detail::format_g17(v) << ",0\n";
        for (const auto& [name, m] : entries_) {
          for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
              os << name << ',' << r << ',' << c << ',' << detail::format_g17(m(r, c).real()) << ','
                 << detail::format_g17(m(r, c).imag()) << '\n';
            }
          }
        }
        break;
      case OutputFormat::text:
        for (const auto& [name, v] : scalars_) os << name << " = " << detail::format_g17(v) << '\n';
        for (const auto& [name, m] : entries_) {
          os << name << ":\n";
          const bool real = m.imag().cwiseAbs().maxCoeff() == 0.0;
          for (Eigen::Index r = 0; r < m.rows(); ++r) {
            os << ' ';
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
              char buf[64];
              if (real) {
                std::snprintf(buf, sizeof buf, " %12.8g", m(r, c).real());
              } else {
                std::snprintf(buf, sizeof buf, " %12.8g%+12.8gi", m(r, c).real(), m(r, c).imag());
              }
              os << buf;
            }
            os << '\n';
          }
        }
        break;
    }
  }

 private:
  OutputFormat format_;
  Json json_ = Json::object();
  std::vector<std::pair<std::string, double>> scalars_;
  std::vector<std::pair<std::string, MatXc>> entries_;
};

KernelVariant parse_variant(const std::string& s) {
  return s == "fock" ? KernelVariant::fock : KernelVariant::commutator;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz-Sylvester-Witt transmutators, time representations and mode kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the command-line flags");

  Globals g;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
  app.add_option("--seed", g.seed, "Seed of the verification streams")->capture_default_str();
  app.add_option("--cases", g.cases, "Random draws per property")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol-abs", g.tol_abs, "Override every floating-point tolerance (absolute part)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol-rel", g.tol_rel, "Override every floating-point tolerance (relative part)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the randomized verification suite");
  bool timings = false, serial = false;
  verify->add_flag("--timings", timings, "Include elapsed times (output no longer reproducible)");
  verify->add_flag("--serial", serial, "Run checks sequentially");

  // boost
  auto* boost = app.add_subcommand("boost", "Weyl boost s(q,m) and Lorentz boost Lambda(q,m)");
  double mass = 1.0;
  std::vector<double> q{0.0, 0.0, 0.0};
  boost->add_option("--m", mass, "Mass m > 0")->required();
  boost->add_option("--q", q, "Spatial momentum x,y,z")->delimiter(',')->expected(3)->required();

  // witt
  auto* witt = app.add_subcommand("witt", "Witt rotation u(q), O(q) and transmutator H(q)");
  double chart_tol = default_chart_tol;
  witt->add_option("--q", q, "Lightlike spatial momentum x,y,z")->delimiter(',')->expected(3)->required();
  witt->add_option("--chart-tol", chart_tol, "Relative distance from -z below which the chart is rejected")
      ->capture_default_str();

  // kernel
  const std::map<std::string, KernelSpecies> species_names{
      {"massive_vector_spin", KernelSpecies::massive_vector_spin},
      {"massive_vector_lorentz", KernelSpecies::massive_vector_lorentz},
      {"massless_spinor", KernelSpecies::massless_spinor},
      {"massless_vector_rest", KernelSpecies::massless_vector_rest},
      {"witt_transverse", KernelSpecies::witt_transverse},
      {"witt_lightlike", KernelSpecies::witt_lightlike}};
  auto* kernel = app.add_subcommand("kernel", "Dump a mode kernel on an x0 grid as CSV");
  KernelSpecies species = KernelSpecies::massive_vector_spin;
  std::string variant = "commutator";
  double lambda = 0.0, mu2 = 1.0, eps_sigma2 = 1.0, x_min = -1.0, x_max = 1.0;
  int points = 11;
  bool classify = false;
  kernel->add_option("species", species, "Kernel species")
      ->transform(CLI::CheckedTransformer(species_names))
      ->required();
  kernel->add_option("--q", q, "Spatial momentum x,y,z")->delimiter(',')->expected(3)->required();
  kernel->add_option("--variant", variant, "commutator or fock")
      ->check(CLI::IsMember({"commutator", "fock"}))
      ->capture_default_str();
  kernel->add_option("--m", mass, "Massive vector mass")->capture_default_str();
  kernel->add_option("--lambda", lambda, "Dilatation constant (default: m)");
  kernel->add_option("--mu2", mu2, "Gauge coupling mu^2")->capture_default_str();
  kernel->add_option("--eps-sigma2", eps_sigma2, "Gauge fixing constant eps sigma^2")->capture_default_str();
  kernel->add_option("--x0-min", x_min)->capture_default_str();
  kernel->add_option("--x0-max", x_max)->capture_default_str();
  kernel->add_option("--points", points)->check(CLI::Range(2, 1000000))->capture_default_str();
  kernel->add_flag("--classify", classify, "Print the pole/dipole label of every entry instead");

  // rep
  auto* rep = app.add_subcommand("rep", "Time representation matrices");
  std::string rep_kind;
  double t = 0.0, omega = 1.0, m0 = 1.0, mass_prime = 1.0, spring = 1.0;
  rep->add_option("kind", rep_kind, "u11, generator, oscillator or two-position")
      ->check(CLI::IsMember({"u11", "generator", "oscillator", "two-position"}))
      ->required();
  rep->add_option("--t", t, "Time")->capture_default_str();
  rep->add_option("--omega", omega, "Frequency (u11, generator)")->capture_default_str();
  rep->add_option("--m0", m0, "M_0 (u11, generator)")->capture_default_str();
  rep->add_option("--mass", mass, "Mass M (oscillator, two-position)")->capture_default_str();
  rep->add_option("--mass-prime", mass_prime, "Mass M' (two-position)")->capture_default_str();
  rep->add_option("--spring", spring, "Spring constant k")->capture_default_str();
  rep->add_option("--variant", variant, "commutator or fock (oscillator)")
      ->check(CLI::IsMember({"commutator", "fock"}))
      ->capture_default_str();

  // triangle
  auto* triangle = app.add_subcommand("triangle", "Solve the electroweak triangle from two known quantities");
  std::optional<double> my, mw, mz, me, theta_w;
  double fermi = 123.0, inverse_alpha = 137.0;
  bool complementary = false;
  triangle->add_option("--my", my, "m_Y in GeV");
  triangle->add_option("--mw", mw, "m_W in GeV");
  triangle->add_option("--mz", mz, "m_Z in GeV");
  triangle->add_option("--me", me, "m_e in GeV");
  triangle->add_option("--theta-w", theta_w, "Weinberg angle in radians");
  triangle->add_option("--fermi-mass", fermi, "Fermi mass M in GeV")->capture_default_str();
  triangle->add_option("--inverse-alpha", inverse_alpha, "Reference 1/alpha for the tension report")
      ->capture_default_str();
  triangle->add_flag("--complementary", complementary, "Take theta_w > pi/4 when (m_Z, m_e) is given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      VerifyConfig cfg;
      cfg.seed = g.seed;
      cfg.cases = g.cases;
      cfg.format = g.format;
      cfg.timings = timings;
      cfg.parallel = !serial;
      if (g.tol_abs || g.tol_rel) cfg.tolerance = Tolerance(g.tol_abs.value_or(0.0), g.tol_rel.value_or(0.0));
      const VerifyResult result = run_verify(cfg);
      render_report(std::cout, result, cfg);
      return result.exit_code;
    }

    MatrixPrinter out(g.format);
    if (*boost) {
      const MassiveMomentum p(mass, to_vec3(q));
      out.scalar("q0", p.energy());
      out.add("weyl_boost", weyl_boost(p));
      out.add("lorentz_boost", lorentz_boost(p));
      out.print(std::cout);
      return 0;
    }
    if (*witt) {
      const LightlikeMomentum p(to_vec3(q));
      out.scalar("q0", p.energy());
      out.add("witt_rotation_su2", witt_rotation_su2(p, chart_tol));
      out.add("witt_rotation_so3", witt_rotation_so3(p, chart_tol));
      out.add("sylvester_witt", sylwitt::sylvester_witt(p, chart_tol));
      out.print(std::cout);
      return 0;
    }
    if (*kernel) {
      const Vec3 qv = to_vec3(q);
      const KernelVariant v = parse_variant(variant);
      const GaugeTriple gauge(mu2, eps_sigma2);
      std::optional<ModeKernel> k;
      double q0 = qv.norm();
      switch (species) {
        case KernelSpecies::massive_vector_spin:
        case KernelSpecies::massive_vector_lorentz: {
          const MassiveVectorParams mv(mass, lambda == 0.0 ? mass : lambda);
          q0 = MassiveMomentum(mass, qv).energy();
          k = species == KernelSpecies::massive_vector_spin ? massive_vector_spin_kernel(mv, qv, v)
                                                            : massive_vector_lorentz_kernel(mv, qv, v);
          break;
        }
        case KernelSpecies::massless_spinor: k = massless_spinor_kernel(qv, v); break;
        case KernelSpecies::massless_vector_rest: k = massless_vector_rest_kernel(qv, gauge); break;
        case KernelSpecies::witt_transverse: k = witt_transverse_kernel(LightlikeMomentum(qv).energy(), gauge, v); break;
        case KernelSpecies::witt_lightlike: k = witt_lightlike_kernel(LightlikeMomentum(qv).energy(), gauge); break;
      }
      if (classify) {
        const OdeOrderTable table = ode_order_check(*k, q0);
        std::cout << "row,col,label,pole_residual,dipole_residual\n";
        for (Eigen::Index r = 0; r < table.rows; ++r) {
          for (Eigen::Index c = 0; c < table.cols; ++c) {
            const auto idx = static_cast<std::size_t>(r * table.cols + c);
            std::cout << r << ',' << c << ',' << to_string(table.at(r, c)) << ','
                      << detail::format_g17(table.pole_residual[idx]) << ','
                      << detail::format_g17(table.dipole_residual[idx]) << '\n';
          }
        }
        return 0;
      }
      std::vector<double> grid;
      for (int i = 0; i < points; ++i) grid.push_back(x_min + (x_max - x_min) * i / (points - 1));
      write_kernel_csv(std::cout, *k, grid);
      return 0;
    }
    if (*rep) {
      if (rep_kind == "u11") {
        out.add("u11", u11_matrix(t, IndefiniteRepParams(omega, m0)));
      } else if (rep_kind == "generator") {
        const IndefiniteRepParams p(omega, m0);
        out.add("generator", u11_generator(p));
        out.add("nilpotent", u11_nilpotent(p));
      } else if (rep_kind == "oscillator") {
        const OscillatorParams p(mass, spring);
        out.scalar("omega", p.omega());
        out.add("oscillator", oscillator_kernel(t, p, variant == "fock" ? OscillatorVariant::fock
                                                                         : OscillatorVariant::commutator));
      } else {
        const TwoPositionParams p(mass, mass_prime, spring);
        out.scalar("omega", p.omega());
        out.scalar("m0", p.m0());
        out.add("two_position", two_position_kernel(t, p));
      }
      out.print(std::cout);
      return 0;
    }
    if (*triangle) {
      if (!(fermi > 0.0)) throw DomainError("the Fermi mass must be positive");
      auto coupling = [&](const std::optional<double>& m) -> std::optional<double> {
        return m ? std::optional<double>(*m / fermi) : std::nullopt;
      };
      const TriangleCouplings c =
          solve_triangle({coupling(my), coupling(mw), coupling(mz), coupling(me), theta_w},
                         complementary ? TriangleBranch::complementary : TriangleBranch::acute);
      const MassSpectrum s = mass_spectrum(c, fermi);
      const WeinbergRelations w = weinberg_relations(s);
      const CouplingTension tension = fine_structure_tension(s, inverse_alpha);
      Json j;
      j["g_Y"] = c.g_y;
      j["g_W"] = c.g_w;
      j["g_Z"] = c.g_z;
      j["g_e"] = c.g_e;
      j["theta_w"] = c.theta_w;
      j["masses"] = {{"fermi_mass", s.fermi_mass}, {"m_Y", s.m_y}, {"m_W", s.m_w}, {"m_Z", s.m_z}, {"m_e", s.m_e}};
      j["sin2theta"] = w.sin2theta;
      j["alpha_e"] = w.alpha_e;
      j["tension"] = {{"inverse_alpha_reference", inverse_alpha},
                      {"inverse_alpha_spectrum", tension.inverse_alpha_spectrum},
                      {"g_e2_spectrum", tension.g_e2_spectrum},
                      {"g_e2_reference", tension.g_e2_reference},
                      {"relative_difference", tension.relative_difference},
                      {"m_e_reference", tension.m_e_reference}};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
  } catch (const sylwitt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
