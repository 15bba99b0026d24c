#pragma once

// Sixth-order central difference stencils for matrix-valued functions of one
// real variable. Used as the independent check on analytic derivatives and by
// the pole/dipole classifier.

#include <array>

namespace sylwitt::fd {

template <typename F>
auto first_derivative(const F& f, double x, double h) {
  static constexpr std::array<double, 3> c{3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
  auto acc = (c[0] * (f(x + h) - f(x - h))).eval();
  for (int k = 2; k <= 3; ++k) acc += c[k - 1] * (f(x + k * h) - f(x - k * h));
  return (acc / h).eval();
}

template <typename F>
auto second_derivative(const F& f, double x, double h) {
  static constexpr std::array<double, 4> c{-49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0};
  auto acc = (c[0] * f(x)).eval();
  for (int k = 1; k <= 3; ++k) acc += c[k] * (f(x + k * h) + f(x - k * h));
  return (acc / (h * h)).eval();
}

}  // namespace sylwitt::fd
