#pragma once

// Deterministic random parameter generators for the property checks.
//
// Each check draws from its own mt19937_64 stream seeded with
// seed ^ fnv1a(check name), so adding a check never shifts another check's
// samples.

#include "sylwitt/linalg.hpp"
#include "sylwitt/transmutators.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace sylwitt {

using Rng = std::mt19937_64;

[[nodiscard]] constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

[[nodiscard]] inline Rng stream_for(std::uint64_t seed, std::string_view name) { return Rng(seed ^ fnv1a(name)); }

[[nodiscard]] inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform on the unit sphere.
[[nodiscard]] inline Vec3 random_direction(Rng& rng) {
  const double z = uniform(rng, -1.0, 1.0);
  const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

/// Unit direction with q^3 >= -1 + margin, i.e. away from the chart singularity.
[[nodiscard]] inline Vec3 random_chart_direction(Rng& rng, double margin = 1e-2) {
  for (;;) {
    const Vec3 n = random_direction(rng);
    if (n.z() >= -1.0 + margin) return n;
  }
}

/// m in [m_lo, m_hi], |q| <= q_over_m * m.
[[nodiscard]] inline MassiveMomentum random_massive(Rng& rng, double m_lo = 0.1, double m_hi = 10.0,
                                                    double q_over_m = 10.0) {
  const double m = uniform(rng, m_lo, m_hi);
  const double size = uniform(rng, 0.0, q_over_m * m);
  return {m, size * random_direction(rng)};
}

/// Chart-regular lightlike momentum with |q| in [lo, hi].
[[nodiscard]] inline LightlikeMomentum random_lightlike(Rng& rng, double lo = 0.1, double hi = 10.0) {
  return LightlikeMomentum(uniform(rng, lo, hi) * random_chart_direction(rng));
}

/// exp(A) for traceless 2x2 A, using A^2 = -det(A) 1.
[[nodiscard]] inline SpinorMatrix exp_traceless(const SpinorMatrix& a) {
  const complex lambda = std::sqrt(-a.determinant());
  const complex sinhc = std::abs(lambda) < 1e-6 ? complex(1.0) + lambda * lambda / 6.0 : std::sinh(lambda) / lambda;
  return std::cosh(lambda) * SpinorMatrix::Identity() + sinhc * a;
}

/// SL(2,C) element exp(A) with A traceless and re/im parts of its free
/// entries uniform in [-1, 1].
[[nodiscard]] inline SpinorMatrix random_sl2c(Rng& rng) {
  auto c = [&] { return complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)); };
  SpinorMatrix a;
  const complex d = c();
  a << d, c(), c(), -d;
  return exp_traceless(a);
}

}  // namespace sylwitt
