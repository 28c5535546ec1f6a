#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "exlorentz/dispersion.hpp"

using namespace exlorentz;

namespace {

std::vector<double> sorted_real(const Eigen::VectorXcd& v) {
  std::vector<double> out;
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> expected_spectrum(const FloatRep& rep, double root_s) {
  std::vector<double> out;
  for (HalfInteger g : rep.gamma_labels) out.push_back(g.value() * root_s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("slash assembles the dispersion operator") {
  FloatRep half = FloatRep::build(HalfInteger::from_twice(1));
  Eigen::MatrixXcd d = slash(half, {1, 0, 0, 0});
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want.diagonal() << 0.5, 0.5, -0.5, -0.5;
  CHECK((d - want).cwiseAbs().maxCoeff() == 0.0);

  FloatRep zero = FloatRep::build(HalfInteger(0));
  CHECK(slash(zero, {3, 1, -2, 0.5}).cwiseAbs().maxCoeff() == 0.0);

  FloatRep one = FloatRep::build(HalfInteger(1));
  CHECK((slash(one, {0, 0, 0, 1}) + one.Gamma[3]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rest-frame spectra") {
  const double m = 1.7;
  FloatRep half = FloatRep::build(HalfInteger::from_twice(1));
  auto s = spectrum(half, {m, 0, 0, 0});
  auto evs = sorted_real(s.eigenvalues);
  std::vector<double> want = {-m / 2, -m / 2, m / 2, m / 2};
  for (int k = 0; k < 4; ++k) CHECK(evs[k] == Catch::Approx(want[k]).margin(1e-12));
  CHECK(s.residual < 1e-12);

  FloatRep one = FloatRep::build(HalfInteger(1));
  auto s1 = spectrum(one, {m, 0, 0, 0});
  auto evs1 = sorted_real(s1.eigenvalues);
  std::vector<double> want1 = {-m, -m, -m, 0, 0, 0, 0, m, m, m};
  for (int k = 0; k < 10; ++k) CHECK(evs1[k] == Catch::Approx(want1[k]).margin(1e-12));
}

TEST_CASE("boosted spectrum matches the conjugated rest-frame operator") {
  // Independent route: build the boost exp(i eta n.K) that brings the rest
  // frame to p and conjugate sqrt(s) Gamma0 with it.
  const FourMomentum p{2, 0.5, -0.3, 0.1};
  const double s = p.mass_squared();
  const double root_s = std::sqrt(s);
  const double pmag = std::sqrt(p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3);
  const double eta = std::atanh(pmag / p.p0);
  const std::array<double, 3> n = {p.p1 / pmag, p.p2 / pmag, p.p3 / pmag};

  for (int t : {1, 2}) {
    FloatRep rep = FloatRep::build(HalfInteger::from_twice(t));
    Eigen::MatrixXcd boost_gen = Eigen::MatrixXcd::Zero(rep.n, rep.n);
    for (int k = 0; k < 3; ++k)
      boost_gen += std::complex<double>(0, eta * n[k]) * rep.K[k];
    Eigen::MatrixXcd S = boost_gen.exp();
    Eigen::MatrixXcd Sinv = S.partialPivLu().solve(Eigen::MatrixXcd::Identity(rep.n, rep.n));
    Eigen::MatrixXcd oracle = S * (root_s * rep.Gamma[0]) * Sinv;

    Eigen::MatrixXcd d = slash(rep, p);
    double dnorm = d.norm();
    CHECK((d - oracle).cwiseAbs().maxCoeff() < 1e-9 * dnorm);

    auto spec = spectrum(rep, p);
    CHECK(spec.residual < 1e-9);
    auto evs = sorted_real(spec.eigenvalues);
    auto want = expected_spectrum(rep, root_s);
    for (std::size_t k = 0; k < want.size(); ++k)
      CHECK(std::abs(evs[k] - want[k]) < 1e-9 * dnorm);
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
      CHECK(std::abs(spec.eigenvalues(k).imag()) < 1e-9 * dnorm);
  }
}

TEST_CASE("timelike spectra are gamma sqrt(s) with multiplicities through lambda 2") {
  const FourMomentum p{1.3, -0.2, 0.7, 0.4};
  const double root_s = std::sqrt(p.mass_squared());
  for (int t = 0; t <= 4; ++t) {
    FloatRep rep = FloatRep::build(HalfInteger::from_twice(t));
    auto spec = spectrum(rep, p);
    double dnorm = t == 0 ? 1.0 : slash(rep, p).norm();
    auto evs = sorted_real(spec.eigenvalues);
    auto want = expected_spectrum(rep, root_s);
    REQUIRE(evs.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
      CHECK(std::abs(evs[k] - want[k]) < 1e-9 * dnorm);
  }
}

TEST_CASE("lightlike momentum is flagged as ill conditioned") {
  FloatRep half = FloatRep::build(HalfInteger::from_twice(1));
  CHECK_THROWS_AS(spectrum(half, {1, 1, 0, 0}), IllConditioned);
}

TEST_CASE("spacelike momentum diagonalizes with imaginary eigenvalues") {
  FloatRep half = FloatRep::build(HalfInteger::from_twice(1));
  FourMomentum p{0.5, 2, 0, 0};  // p.p < 0
  auto s = spectrum(half, p);
  CHECK(s.residual < 1e-12);
  double root = std::sqrt(-p.mass_squared()) / 2;
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(std::abs(s.eigenvalues(k).real()) < 1e-12);
    CHECK(std::abs(s.eigenvalues(k).imag()) == Catch::Approx(root).margin(1e-12));
  }
}

TEST_CASE("plane-wave currents") {
  const FourMomentum p{2, 0.5, -0.3, 0.1};
  FourMomentum q{2, -0.1, 0.4, 0.2};
  double scale = std::sqrt(p.mass_squared() / q.mass_squared());
  q = {q.p0 * scale, q.p1 * scale, q.p2 * scale, q.p3 * scale};

  for (int t : {1, 2}) {
    FloatRep rep = FloatRep::build(HalfInteger::from_twice(t));
    auto sp = spectrum(rep, p);
    auto sq = spectrum(rep, q);
    Eigen::Index kp = 0, kq = 0;
    for (Eigen::Index k = 0; k < sp.eigenvalues.size(); ++k)
      if (sp.eigenvalues(k).real() > sp.eigenvalues(kp).real()) kp = k;
    for (Eigen::Index k = 0; k < sq.eigenvalues.size(); ++k)
      if (sq.eigenvalues(k).real() > sq.eigenvalues(kq).real()) kq = k;

    // Self current: zero residual by construction, real components.
    auto self = plane_wave_current(rep, p, sp.eigenvectors.col(kp), p,
                                   sp.eigenvectors.col(kp));
    CHECK(self.conservation_residual == 0.0);
    double jscale = std::max({std::abs(self.j0), std::abs(self.j1), std::abs(self.j2),
                              std::abs(self.j3)});
    CHECK(std::abs(self.j0.imag()) < 1e-12 * jscale);
    CHECK(std::abs(self.j1.imag()) < 1e-12 * jscale);
    CHECK(std::abs(self.j2.imag()) < 1e-12 * jscale);
    CHECK(std::abs(self.j3.imag()) < 1e-12 * jscale);

    // Equal-mass cross current is conserved.
    auto cross = plane_wave_current(rep, p, sp.eigenvectors.col(kp), q,
                                    sq.eigenvectors.col(kq));
    double cscale = std::max({std::abs(cross.j0), std::abs(cross.j1), std::abs(cross.j2),
                              std::abs(cross.j3), 1e-300});
    CHECK(cross.conservation_residual < 1e-9 * (p.norm() + q.norm()) * cscale);

    // Mixing branches of the spectrum is rejected.
    Eigen::Index kneg = 0;
    for (Eigen::Index k = 0; k < sq.eigenvalues.size(); ++k)
      if (sq.eigenvalues(k).real() < sq.eigenvalues(kneg).real()) kneg = k;
    CHECK_THROWS_AS(plane_wave_current(rep, p, sp.eigenvectors.col(kp), q,
                                       sq.eigenvectors.col(kneg)),
                    EigenvalueMismatch);

    // Any equal-eigenvalue pair is conserved, across every branch of the
    // spectrum including the null modes at integer spin.
    for (Eigen::Index a = 0; a < sp.eigenvalues.size(); ++a)
      for (Eigen::Index b = 0; b < sq.eigenvalues.size(); ++b) {
        if (std::abs(sp.eigenvalues(a) - sq.eigenvalues(b)) > 1e-10) continue;
        auto j = plane_wave_current(rep, p, sp.eigenvectors.col(a), q,
                                    sq.eigenvectors.col(b));
        double js = std::max({std::abs(j.j0), std::abs(j.j1), std::abs(j.j2),
                              std::abs(j.j3)});
        // Tiny absolute floor for pairs whose current is pure roundoff.
        CHECK(j.conservation_residual < 1e-9 * (p.norm() + q.norm()) * js + 1e-12);
      }
  }
}

TEST_CASE("pseudo-hermiticity survives the float bridge") {
  for (int t : {1, 2, 3}) {
    FloatRep rep = FloatRep::build(HalfInteger::from_twice(t));
    for (int mu = 0; mu < 4; ++mu) {
      Eigen::MatrixXcd lhs = rep.g * rep.Gamma[mu].adjoint() * rep.g;
      CHECK((lhs - rep.Gamma[mu]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("finite transformation covariance") {
  FloatRep half = FloatRep::build(HalfInteger::from_twice(1));
  FloatRep one = FloatRep::build(HalfInteger(1));

  CHECK(covariance_check(half, TransformKind::Rotation, {0, 0, 1}, 0.0).max_deviation <
        1e-15);
  CHECK(covariance_check(half, TransformKind::Rotation, {0, 0, 1}, M_PI / 2).max_deviation <
        1e-10);
  CHECK(covariance_check(one, TransformKind::Boost, {1, 0, 0}, 1.0).max_deviation < 1e-8);
  CHECK(covariance_check(one, TransformKind::Rotation, {1, 1, 1}, 0.9).max_deviation <
        1e-8);
  CHECK(covariance_check(half, TransformKind::Boost, {0.3, -0.4, 0.8}, -1.3).max_deviation <
        1e-8);

  // Quarter turn about z sends Gamma1 to the negated Gamma2 column, the
  // finite form of the first-order shift Gamma1 - theta Gamma2.
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
  a += std::complex<double>(0, M_PI / 2) * half.J[2];
  Eigen::MatrixXcd sr = a.exp();
  Eigen::MatrixXcd srinv = sr.partialPivLu().solve(Eigen::MatrixXcd::Identity(4, 4));
  Eigen::MatrixXcd image = sr * half.Gamma[1] * srinv;
  CHECK((image + half.Gamma[2]).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("split exponentials converge at first order") {
  // Splitting exp(i theta n.J) into per-axis factors is a first-order
  // product formula: the defect scales like theta^2 / k, i.e. k times the
  // square of the step.  Verify dev(k) * k is flat across k = 1, 2, 4.
  FloatRep one = FloatRep::build(HalfInteger(1));
  const double theta = 0.8;
  const std::array<double, 3> n = {1 / std::sqrt(3.0), 1 / std::sqrt(3.0),
                                   1 / std::sqrt(3.0)};
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(one.n, one.n);
  for (int k = 0; k < 3; ++k)
    total += std::complex<double>(0, theta * n[k]) * one.J[k];
  Eigen::MatrixXcd exact = total.exp();

  auto trotter = [&](int k) {
    Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(one.n, one.n);
    for (int axis = 0; axis < 3; ++axis) {
      Eigen::MatrixXcd a =
          std::complex<double>(0, theta * n[axis] / k) * one.J[axis];
      step = step * a.exp();
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(one.n, one.n);
    for (int rep = 0; rep < k; ++rep) acc = acc * step;
    return (acc - exact).norm();
  };

  double d1 = trotter(1), d2 = trotter(2), d4 = trotter(4);
  CHECK(d2 < d1);
  CHECK(d4 < d2);
  double lo = std::min({d1 * 1, d2 * 2, d4 * 4});
  double hi = std::max({d1 * 1, d2 * 2, d4 * 4});
  CHECK(hi / lo < 1.5);
}
