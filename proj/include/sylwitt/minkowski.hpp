#pragma once

// Four-vectors, the Sylvester and Witt metric forms, Pauli contractions and the
// spinor -> vector map D^(1/2|1/2).
//
// Sign convention: eta = diag(1,-1,-1,-1), so timelike momenta have q^2 = m^2 > 0.
// Index placement is plain matrix algebra; a bilinear form g evaluates q^T g p.

#include "sylwitt/linalg.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace sylwitt {

/// Real translation/momentum vector (q^0, q^1, q^2, q^3) in units of the
/// reference mass.
class FourVector {
 public:
  FourVector() : v_(Vec4::Zero()) {}
  FourVector(double q0, double q1, double q2, double q3) : v_(q0, q1, q2, q3) {}
  explicit FourVector(const Vec4& v) : v_(v) {}

  /// Forward mass shell: q^0 = sqrt(m^2 + |q|^2). Requires m >= 0.
  static FourVector on_shell(double m, const Vec3& q) {
    if (!(m >= 0.0)) throw DomainError("on-shell mass must be non-negative");
    return {std::sqrt(m * m + q.squaredNorm()), q.x(), q.y(), q.z()};
  }
  /// Forward light cone: q^0 = |q|.
  static FourVector lightlike(const Vec3& q) { return on_shell(0.0, q); }

  [[nodiscard]] double operator[](int i) const { return v_[i]; }
  [[nodiscard]] double time() const { return v_[0]; }
  [[nodiscard]] Vec3 space() const { return v_.tail<3>(); }
  [[nodiscard]] const Vec4& vector() const { return v_; }

 private:
  Vec4 v_;
};

enum class MetricVariant { sylvester, witt };

/// Symmetric bilinear form on Minkowski translations, tagged by the basis it
/// is written in.
struct MetricForm {
  MetricVariant variant;
  LorentzMatrix matrix;

  /// eta = diag(1,-1,-1,-1) in a Sylvester (time + space) basis.
  static const MetricForm& sylvester() {
    static const MetricForm form{MetricVariant::sylvester, Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal()};
    return form;
  }

  /// iota in a Witt basis: slots 0 and 3 are the two lightlike directions.
  static const MetricForm& witt() {
    static const MetricForm form = [] {
      LorentzMatrix m = LorentzMatrix::Zero();
      m(0, 3) = m(3, 0) = -1.0;
      m(1, 1) = m(2, 2) = -1.0;
      return MetricForm{MetricVariant::witt, m};
    }();
    return form;
  }
};

[[nodiscard]] inline double inner(const FourVector& q, const FourVector& p, const MetricForm& g) {
  return q.vector().dot(g.matrix * p.vector());
}

[[nodiscard]] inline double inner(const FourVector& q, const FourVector& p) {
  return inner(q, p, MetricForm::sylvester());
}

/// rho_k = (1, sigma^1, sigma^2, sigma^3).
[[nodiscard]] inline const SpinorMatrix& pauli(int k) {
  static const std::array<SpinorMatrix, 4> rho = [] {
    std::array<SpinorMatrix, 4> r;
    r[0] << 1.0, 0.0, 0.0, 1.0;
    r[1] << 0.0, 1.0, 1.0, 0.0;
    r[2] << 0.0, -I, I, 0.0;
    r[3] << 1.0, 0.0, 0.0, -1.0;
    return r;
  }();
  return rho.at(static_cast<std::size_t>(k));
}

/// rho-bar_k = (1, -sigma^1, -sigma^2, -sigma^3).
[[nodiscard]] inline SpinorMatrix pauli_bar(int k) { return k == 0 ? pauli(0) : SpinorMatrix(-pauli(k)); }

/// sigma.v for a spatial 3-vector.
[[nodiscard]] inline SpinorMatrix sigma_dot(const Vec3& v) {
  return v.x() * pauli(1) + v.y() * pauli(2) + v.z() * pauli(3);
}

/// rho_k q^k (or rho-bar_k q^k when bar is set). det = q^2 for both.
[[nodiscard]] inline SpinorMatrix slash(const FourVector& q, bool bar = false) {
  const SpinorMatrix s = sigma_dot(q.space());
  return q.time() * pauli(0) + (bar ? SpinorMatrix(-s) : s);
}

/// Contraction with eps^{jk}_{lr} = d^j_l d^k_r - d^k_l d^j_r, i.e. A - A^T.
[[nodiscard]] inline LorentzMatrix epsilon_antisymmetrize(const LorentzMatrix& a) { return a - a.transpose(); }

/// D^(1/2|1/2)(s): Lambda^k_j = 1/2 tr(rho_k s rho_j s^dagger).
///
/// With this convention s slash(x) s^dagger = slash(Lambda x), the map is a
/// homomorphism and vector_rep(-s) = vector_rep(s).
[[nodiscard]] inline LorentzMatrix vector_rep(const SpinorMatrix& s) {
  const complex det = s.determinant();
  if (std::abs(det) <= 1e-300 || !std::isfinite(std::abs(det))) {
    throw DomainError("vector_rep: singular spinor matrix");
  }
  LorentzMatrix out;
  const SpinorMatrix s_dag = s.adjoint();
  for (int j = 0; j < 4; ++j) {
    const SpinorMatrix image = s * pauli(j) * s_dag;
    for (int k = 0; k < 4; ++k) {
      out(k, j) = 0.5 * (pauli(k) * image).trace().real();
    }
  }
  return out;
}

}  // namespace sylwitt
