#pragma once

// Fixed-size matrix vocabulary, error types and tolerance handling shared by
// every sylwitt module.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace sylwitt {

using complex = std::complex<double>;

inline constexpr complex I{0.0, 1.0};

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

/// Complex 2x2: SL(2,C)/SU(2) elements, projectors, Pauli contractions.
using SpinorMatrix = Eigen::Matrix2cd;
/// Real 4x4: Lorentz transformations, metric forms, transmutators.
using LorentzMatrix = Eigen::Matrix4d;

using Mat3c = Eigen::Matrix3cd;
using Mat4c = Eigen::Matrix4cd;
using MatXc = Eigen::MatrixXcd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (zero momentum, m <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Sylvester-Witt chart u(q) is undefined near q pointing along -z.
class SingularChart : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Absolute plus relative tolerance; a residual r against a reference
/// magnitude s passes when r <= absolute + relative * s.
struct Tolerance {
  double absolute = 0.0;
  double relative = 0.0;

  constexpr Tolerance() = default;
  constexpr Tolerance(double abs, double rel = 0.0) : absolute(abs), relative(rel) {
    if (!(abs >= 0.0) || !(rel >= 0.0)) throw DomainError("tolerances must be non-negative");
  }

  [[nodiscard]] constexpr double bound(double scale = 0.0) const {
    return absolute + relative * std::abs(scale);
  }
  [[nodiscard]] constexpr bool accepts(double residual, double scale = 0.0) const {
    return residual <= bound(scale);
  }
};

/// Largest absolute entry; the max-norm used for every residual.
template <typename Derived>
[[nodiscard]] double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename A, typename B>
[[nodiscard]] double max_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return max_abs(a - b);
}

}  // namespace sylwitt
