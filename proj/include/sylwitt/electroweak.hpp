#pragma once

// The rectangular electroweak triangle: legs g_Y, g_W, hypotenuse g_Z, height
// g_e and angle theta_w with
//   g_Y^2 + g_W^2 = g_Z^2,   g_Y g_W = g_Z g_e,   tan theta_w = g_Y / g_W.
// Masses follow as m_X = g_X * M (M the Fermi mass).

#include "sylwitt/linalg.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace sylwitt {

struct TriangleCouplings {
  double g_y;
  double g_w;
  double g_z;
  double g_e;
  double theta_w;
};

/// Any subset of the five triangle quantities; exactly two must be set.
struct TriangleInput {
  std::optional<double> g_y{};
  std::optional<double> g_w{};
  std::optional<double> g_z{};
  std::optional<double> g_e{};
  std::optional<double> theta_w{};
};

/// (g_Z, g_e) fixes sin 2 theta only; the acute branch has theta <= pi/4
/// (g_Y <= g_W), the complementary one theta >= pi/4.
enum class TriangleBranch { acute, complementary };

class TriangleError : public DomainError {
 public:
  enum class Kind { underdetermined, inconsistent, non_positive };

  TriangleError(Kind kind, const std::string& what) : DomainError(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {
inline TriangleCouplings triangle_from_angle(double theta, double g_z) {
  const double s = std::sin(theta), c = std::cos(theta);
  return {g_z * s, g_z * c, g_z, g_z * s * c, theta};
}
}  // namespace detail

[[nodiscard]] inline TriangleCouplings solve_triangle(const TriangleInput& in,
                                                      TriangleBranch branch = TriangleBranch::acute) {
  using Kind = TriangleError::Kind;
  const std::optional<double>* fields[] = {&in.g_y, &in.g_w, &in.g_z, &in.g_e, &in.theta_w};
  int known = 0;
  for (const auto* f : fields) {
    if (f->has_value()) {
      ++known;
      if (!(**f > 0.0) || !std::isfinite(**f)) {
        throw TriangleError(Kind::non_positive, "triangle quantities must be positive and finite");
      }
    }
  }
  if (known != 2) {
    throw TriangleError(Kind::underdetermined, "exactly two of g_Y, g_W, g_Z, g_e, theta_w must be given, got " +
                                                   std::to_string(known));
  }

  const double half_pi = std::numbers::pi / 2.0;
  if (in.theta_w) {
    const double th = *in.theta_w;
    if (!(th < half_pi)) throw TriangleError(Kind::inconsistent, "theta_w must lie in (0, pi/2)");
    const double s = std::sin(th), c = std::cos(th);
    if (in.g_z) return detail::triangle_from_angle(th, *in.g_z);
    if (in.g_y) return detail::triangle_from_angle(th, *in.g_y / s);
    if (in.g_w) return detail::triangle_from_angle(th, *in.g_w / c);
    return detail::triangle_from_angle(th, *in.g_e / (s * c));
  }

  if (in.g_y && in.g_w) {
    const double y = *in.g_y, w = *in.g_w;
    const double z = std::hypot(y, w);
    return {y, w, z, y * w / z, std::atan2(y, w)};
  }
  if (in.g_z && (in.g_y || in.g_w)) {
    const double z = *in.g_z;
    const double leg = in.g_y ? *in.g_y : *in.g_w;
    if (!(leg < z)) throw TriangleError(Kind::inconsistent, "a leg must be shorter than the hypotenuse g_Z");
    const double other = std::sqrt((z - leg) * (z + leg));
    const double y = in.g_y ? leg : other;
    const double w = in.g_y ? other : leg;
    return {y, w, z, y * w / z, std::atan2(y, w)};
  }
  if (in.g_e && (in.g_y || in.g_w)) {
    const double e = *in.g_e;
    const double leg = in.g_y ? *in.g_y : *in.g_w;
    if (!(e < leg)) throw TriangleError(Kind::inconsistent, "the height g_e must be shorter than either leg");
    // e^2 (Y^2 + W^2) = Y^2 W^2  =>  other = e leg / sqrt(leg^2 - e^2)
    const double other = e * leg / std::sqrt((leg - e) * (leg + e));
    const double y = in.g_y ? leg : other;
    const double w = in.g_y ? other : leg;
    const double z = std::hypot(y, w);
    return {y, w, z, e, std::atan2(y, w)};
  }

  // (g_Z, g_e): sin 2 theta = 2 g_e / g_Z.
  const double z = *in.g_z, e = *in.g_e;
  const double sin2 = 2.0 * e / z;
  if (sin2 > 1.0) throw TriangleError(Kind::inconsistent, "2 g_e > g_Z: sin 2 theta_w would exceed 1");
  const double acute = 0.5 * std::asin(sin2);
  TriangleCouplings out = detail::triangle_from_angle(branch == TriangleBranch::acute ? acute : half_pi - acute, z);
  out.g_e = e;
  return out;
}

/// Masses in GeV/c^2 for a Fermi mass M: m_X = g_X M.
struct MassSpectrum {
  double fermi_mass;
  double m_y;
  double m_w;
  double m_z;
  double m_e;
};

[[nodiscard]] inline MassSpectrum mass_spectrum(const TriangleCouplings& c, double fermi_mass) {
  if (!(fermi_mass > 0.0)) throw DomainError("the Fermi mass must be positive");
  return {fermi_mass, c.g_y * fermi_mass, c.g_w * fermi_mass, c.g_z * fermi_mass, c.g_e * fermi_mass};
}

struct WeinbergRelations {
  /// sin 2 theta_w = 2 m_e / m_Z.
  double sin2theta;
  /// alpha_e = m_e^2 / (4 pi M^2).
  double alpha_e;
};

[[nodiscard]] inline WeinbergRelations weinberg_relations(const MassSpectrum& s) {
  if (!(2.0 * s.m_e <= s.m_z)) {
    throw TriangleError(TriangleError::Kind::inconsistent, "2 m_e > m_Z");
  }
  return {2.0 * s.m_e / s.m_z, s.m_e * s.m_e / (4.0 * std::numbers::pi * s.fermi_mass * s.fermi_mass)};
}

/// Comparison of g_e^2 = (m_e/M)^2 against 4 pi alpha for a reference alpha.
struct CouplingTension {
  double g_e2_spectrum;
  double g_e2_reference;
  /// g_e2_spectrum / g_e2_reference - 1.
  double relative_difference;
  /// m_e that the reference alpha would imply at the same Fermi mass.
  double m_e_reference;
  /// 1/alpha_e implied by the spectrum.
  double inverse_alpha_spectrum;
};

[[nodiscard]] inline CouplingTension fine_structure_tension(const MassSpectrum& s, double inverse_alpha = 137.0) {
  const double g_e = s.m_e / s.fermi_mass;
  const double ref = 4.0 * std::numbers::pi / inverse_alpha;
  return {g_e * g_e, ref, g_e * g_e / ref - 1.0, std::sqrt(ref) * s.fermi_mass,
          4.0 * std::numbers::pi / (g_e * g_e)};
}

}  // namespace sylwitt
