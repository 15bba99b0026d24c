#include "sylwitt/kernels.hpp"
#include "sylwitt/sampling.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

using namespace sylwitt;

namespace {
const double pi = std::numbers::pi;

GaugeTriple generic_gauge() { return {1.3, 0.7}; }
}  // namespace

TEST(MassiveVector, CommutatorVanishesAtEqualTime) {
  const auto mode = massive_vector_mode(0.0, MassiveVectorParams(1.0), Vec3(0.1, 0.2, 0.3), KernelVariant::commutator);
  EXPECT_EQ(max_abs(mode.spin), 0.0);
  EXPECT_EQ(max_abs(mode.lorentz), 0.0);
}

TEST(MassiveVector, FockAtEqualTimeIsCoupling) {
  const auto mode = massive_vector_mode(0.0, MassiveVectorParams(1.0, 1.0), Vec3(0.1, 0.2, 0.3), KernelVariant::fock);
  EXPECT_LE(max_diff(mode.spin, Mat3c::Identity()), 0.0);
}

TEST(MassiveVector, SpinEntryAlongZ) {
  const double x0 = 2.0 * pi / 1.25 / 4.0;
  const auto mode = massive_vector_mode(x0, MassiveVectorParams(1.0), Vec3(0, 0, 0.75), KernelVariant::commutator);
  EXPECT_LE(std::abs(mode.spin(1, 1) - I * std::sin(1.25 * x0)), 1e-15);
  EXPECT_LE(std::abs(mode.spin(1, 1) - I), 1e-15);
}

TEST(MassiveVector, LorentzBlockIsBoostedProjector) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const MassiveVectorParams p(uniform(rng, 0.2, 5), uniform(rng, 0.2, 5));
    const MassiveMomentum mom = random_massive(rng, p.mass, p.mass, 5.0);
    const auto mode = massive_vector_mode(1.0, p, mom.space(), KernelVariant::fock);
    const double c = std::cos(mom.energy());
    const Mat4c expected = (p.coupling2() * c * spin1_projector(mom)).cast<complex>();
    EXPECT_LE(max_diff(mode.lorentz, expected), 1e-10 * std::max(1.0, max_abs(expected)));
  }
}

TEST(MassiveVector, RejectsBadParameters) {
  EXPECT_THROW(MassiveVectorParams(0.0), DomainError);
  EXPECT_THROW(MassiveVectorParams(1.0, -1.0), DomainError);
}

TEST(DerivedBlocks, CanonicalAtEqualTime) {
  const MassiveVectorParams p(1.3, 0.4);
  const Vec3 q(0.2, -0.5, 0.9);
  const double q0 = MassiveMomentum(p.mass, q).energy();
  const DerivedBlocks b = massive_vector_derived_blocks(0.0, p, q);
  EXPECT_EQ(max_abs(b[0][1]), 0.0);
  EXPECT_EQ(max_abs(b[1][0]), 0.0);
  EXPECT_LE(max_diff(b[0][0], (q0 * Mat3c::Identity()).eval()), 1e-15);
  auto zz = [&](double x) { return massive_vector_mode(x, p, q, KernelVariant::commutator).spin; };
  const Mat3c slope = oracle::richardson_derivative(zz, 0.0, 1e-3);
  EXPECT_LE(max_diff(slope, (I * q0 * p.coupling2() * Mat3c::Identity()).eval()), 1e-8);
}

TEST(DerivedBlocks, ConsistentWithFiniteDifferences) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const MassiveVectorParams p(uniform(rng, 0.2, 5), uniform(rng, 0.2, 5));
    const Vec3 q = uniform(rng, 0.0, 5.0) * random_direction(rng);
    const double x0 = uniform(rng, -5, 5), g2 = p.coupling2();
    auto zz = [&](double x) { return massive_vector_mode(x, p, q, KernelVariant::commutator).spin; };
    auto dzz = [&](double x) { return oracle::richardson_derivative(zz, x, 1e-3); };
    const DerivedBlocks b = massive_vector_derived_blocks(x0, p, q);
    const double scale = std::max(1.0, max_abs(b[1][0]));
    EXPECT_LE(max_diff(b[0][0], (-I * dzz(x0) / g2).eval()), 1e-8 * scale);
    EXPECT_LE(max_diff(b[1][0], (-oracle::richardson_derivative(dzz, x0, 1e-3) / (g2 * g2)).eval()), 1e-6 * scale);
  }
}

TEST(Spinor, AnticommutatorAtEqualTimeIsIdentity) {
  EXPECT_LE(max_diff(massless_spinor_mode(0.0, Vec3(0.3, -0.2, 1.1), KernelVariant::commutator), SpinorMatrix::Identity()), 1e-15);
}

TEST(Spinor, AlongZIsDiagonalPhases) {
  const double t = 0.83;
  const SpinorMatrix a = massless_spinor_mode(t, Vec3(0, 0, 1), KernelVariant::commutator);
  const SpinorMatrix f = massless_spinor_mode(t, Vec3(0, 0, 1), KernelVariant::fock);
  EXPECT_LE(std::abs(a(0, 0) - std::polar(1.0, t)), 1e-15);
  EXPECT_LE(std::abs(a(1, 1) - std::polar(1.0, -t)), 1e-15);
  EXPECT_LE(std::abs(f(1, 1) + std::polar(1.0, -t)), 1e-15);
  EXPECT_EQ(std::abs(a(0, 1)) + std::abs(f(1, 0)), 0.0);
}

TEST(Spinor, WeylEquation) {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const Vec3 q = uniform(rng, 0.1, 10.0) * random_direction(rng);
    const double x0 = uniform(rng, -5, 5);
    for (auto v : {KernelVariant::commutator, KernelVariant::fock}) {
      auto k = [&](double x) { return massless_spinor_mode(x, q, v); };
      const SpinorMatrix lhs = oracle::richardson_derivative(k, x0, 1e-3 / q.norm());
      EXPECT_LE(max_diff(lhs, (I * sigma_dot(q) * k(x0)).eval()), 1e-8 * q.norm());
    }
  }
}

TEST(RestMode, VanishesAtEqualTime) {
  EXPECT_EQ(max_abs(massless_vector_rest_mode(0.0, Vec3(0.4, 0.1, -0.3), generic_gauge())), 0.0);
}

TEST(RestMode, FeynmanPointIsPureMetric) {
  const GaugeTriple g = GaugeTriple::feynman(2.0);
  const Vec3 q(0.4, 0.1, -0.3);
  const double x0 = 1.7;
  const Mat4c expected = (-g.mu2 * I * std::sin(x0 * q.norm())) * MetricForm::sylvester().matrix.cast<complex>();
  EXPECT_LE(max_diff(massless_vector_rest_mode(x0, q, g), expected), 1e-15);
}

TEST(RestMode, TimeTimeSlopeAtZero) {
  const GaugeTriple g = generic_gauge();
  const Vec3 q(0.4, 0.1, -0.3);
  auto k = [&](double x) { return massless_vector_rest_mode(x, q, g); };
  const complex slope = oracle::richardson_derivative(k, 0.0, 1e-3)(0, 0);
  EXPECT_LE(std::abs(slope - (-I * q.norm() * (2.0 * g.mu2 + g.eps_sigma2))), 1e-9);
}

TEST(WittBlocks, VanishAtEqualTime) {
  const WittBlocks b = massless_vector_witt_blocks(0.0, 1.3, generic_gauge());
  EXPECT_EQ(max_abs(b.transverse), 0.0);
  EXPECT_EQ(max_abs(b.lightlike), 0.0);
}

TEST(WittBlocks, FeynmanPoint) {
  const GaugeTriple g = GaugeTriple::feynman(1.7);
  EXPECT_EQ(g.inv_m0(), 0.0);
  EXPECT_NEAR(g.n0(), 2.0, 1e-15);
  const double x0 = 0.9, q0 = 1.2;
  SpinorMatrix expected;
  expected << 0.0, 1.0, 1.0, 0.0;
  expected *= g.mu2 * I * std::sin(x0 * q0);
  EXPECT_LE(max_diff(massless_vector_witt_blocks(x0, q0, g).lightlike, expected), 1e-15);
}

TEST(WittBlocks, TransverseFockNormalization) {
  const GaugeTriple g(2.5, -0.3);
  EXPECT_EQ(massless_vector_transverse_fock(0.0, 1.1, g), (2.5 * SpinorMatrix::Identity()).eval());
}

TEST(WittBlocks, TransverseIndependentOfGaugeConstant) {
  const double mu2 = 1.9;
  const SpinorMatrix ref = massless_vector_witt_blocks(0.77, 1.3, GaugeTriple(mu2, 0.5 * mu2)).transverse;
  for (double f : {-0.5, 2.0, -2.0}) {
    const SpinorMatrix other = massless_vector_witt_blocks(0.77, 1.3, GaugeTriple(mu2, f * mu2)).transverse;
    EXPECT_TRUE((other.array() == ref.array()).all());
  }
}

TEST(WittSylvester, ZeroAtEqualTime) {
  EXPECT_EQ(witt_sylvester_residual(0.0, Vec3(0.3, 0.4, 0.5), generic_gauge()), 0.0);
}

TEST(WittSylvester, FeynmanPoint) {
  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    const GaugeTriple g = GaugeTriple::feynman(uniform(rng, 0.2, 5));
    EXPECT_LT(witt_sylvester_residual(uniform(rng, -5, 5), random_lightlike(rng, 0.2, 5).space(), g), 1e-12);
  }
}

TEST(WittSylvester, GenericGauge) {
  Rng rng(45);
  for (int i = 0; i < 100; ++i) {
    const GaugeTriple g(uniform(rng, 0.2, 5), uniform(rng, 0.1, 5) * (i % 2 ? 1 : -1));
    EXPECT_LT(witt_sylvester_residual(uniform(rng, -5, 5), random_lightlike(rng, 0.2, 5).space(), g), 1e-9);
  }
}

TEST(WittSylvester, ChangingTheNullSlotsBreaksAgreement) {
  // Swapping the two lightlike slots of the Witt kernel must be detected.
  const GaugeTriple g = generic_gauge();
  const LightlikeMomentum q(Vec3(0.3, -0.4, 0.5));
  const double x0 = 1.1;
  Mat4c k = witt_basis_kernel(x0, q.energy(), g);
  std::swap(k(0, 0), k(3, 3));
  const Mat4c h = sylvester_witt(q).cast<complex>();
  EXPECT_GT(max_diff(h * k * h.transpose(), massless_vector_rest_mode(x0, q.space(), g)), 1e-3);
}

TEST(OdeOrder, MassiveSpinIsPole) {
  const MassiveVectorParams p(1.0);
  const Vec3 q(0.2, 0.3, 0.4);
  const OdeOrderTable t = ode_order_check(massive_vector_spin_kernel(p, q, KernelVariant::commutator),
                                          MassiveMomentum(1.0, q).energy());
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(t.at(r, c), r == c ? OdeOrder::pole : OdeOrder::zero);
  }
}

TEST(OdeOrder, LightlikeDiagonalIsDipole) {
  const double q0 = 0.9;
  const OdeOrderTable t = ode_order_check(witt_lightlike_kernel(q0, generic_gauge()), q0);
  EXPECT_EQ(t.at(0, 0), OdeOrder::dipole);
  EXPECT_EQ(t.at(1, 1), OdeOrder::dipole);
  EXPECT_EQ(t.at(0, 1), OdeOrder::pole);
  EXPECT_EQ(t.at(1, 0), OdeOrder::pole);
}

TEST(OdeOrder, FeynmanPointHasNoDipoles) {
  const Vec3 q(0.1, 0.7, -0.2);
  const GaugeTriple g = GaugeTriple::feynman(1.4);
  for (const ModeKernel& k : {witt_lightlike_kernel(q.norm(), g), massless_vector_rest_kernel(q, g)}) {
    for (OdeOrder o : ode_order_check(k, q.norm()).labels) EXPECT_TRUE(o == OdeOrder::pole || o == OdeOrder::zero);
  }
}

TEST(OdeOrder, RestModeGenericGaugeHasDipoles) {
  const Vec3 q(0.1, 0.7, -0.2);
  const OdeOrderTable t = ode_order_check(massless_vector_rest_kernel(q, generic_gauge()), q.norm());
  EXPECT_EQ(t.at(0, 0), OdeOrder::dipole);
  EXPECT_EQ(t.at(1, 2), OdeOrder::dipole);
}

TEST(OdeOrder, ThirdOrderTermIsUnresolved) {
  const double q0 = 1.0;
  ModeKernel k{KernelSpecies::witt_lightlike, KernelVariant::commutator, 1, 1,
               [](double x) -> MatXc { return MatXc::Constant(1, 1, complex(x * x * std::cos(x))); }};
  EXPECT_EQ(ode_order_check(k, q0).at(0, 0), OdeOrder::unresolved);
}

TEST(KernelCsv, HeaderAndRows) {
  std::ostringstream os;
  const std::vector<double> grid{0.0, 0.5};
  write_kernel_csv(os, witt_transverse_kernel(1.0, GaugeTriple(1.0, 1.0)), grid);
  std::istringstream in(os.str());
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  EXPECT_EQ(header, "x0,re_00,im_00,re_01,im_01,re_10,im_10,re_11,im_11");
  EXPECT_EQ(row0, "0,0,0,0,0,0,0,0,0");
  char expected[64];
  std::snprintf(expected, sizeof expected, "%.17g", std::sin(0.5));
  EXPECT_EQ(row1, std::string("0.5,0,") + expected + ",0,0,0,0,0," + expected);
}

TEST(KernelParity, CommutatorsOddFockEven) {
  const MassiveVectorParams p(0.7, 1.9);
  const Vec3 q(0.3, -0.8, 0.4);
  const double x0 = 1.37;
  const auto plus = massive_vector_mode(x0, p, q, KernelVariant::commutator);
  const auto minus = massive_vector_mode(-x0, p, q, KernelVariant::commutator);
  EXPECT_LE(max_diff(minus.lorentz, (-plus.lorentz.transpose()).eval()), 1e-12);
  const auto fplus = massive_vector_mode(x0, p, q, KernelVariant::fock);
  const auto fminus = massive_vector_mode(-x0, p, q, KernelVariant::fock);
  EXPECT_LE(max_diff(fminus.lorentz, fplus.lorentz.transpose()), 1e-12);
  EXPECT_LE(max_diff(massless_vector_rest_mode(-x0, -q, generic_gauge()),
                     (-massless_vector_rest_mode(x0, q, generic_gauge()).transpose()).eval()),
            1e-12);
}
