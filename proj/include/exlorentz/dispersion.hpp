#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "exlorentz/exact_matrix.hpp"

namespace exlorentz {

/// Four-momentum with signature (+,-,-,-): p.p = p0^2 - |p|^2.
struct FourMomentum {
  double p0 = 0, p1 = 0, p2 = 0, p3 = 0;

  double mass_squared() const { return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3; }
  bool is_timelike() const { return mass_squared() > 0; }
  double norm() const { return std::sqrt(p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3); }

  friend FourMomentum operator-(const FourMomentum& a, const FourMomentum& b) {
    return {a.p0 - b.p0, a.p1 - b.p1, a.p2 - b.p2, a.p3 - b.p3};
  }
};

inline Eigen::MatrixXcd to_float(const ExactMatrix& m) {
  Eigen::MatrixXcd out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

/// Double-precision copies of the matrices the dispersion analysis needs.
struct FloatRep {
  HalfInteger lambda;
  Eigen::Index n = 0;
  std::array<Eigen::MatrixXcd, 3> J;
  std::array<Eigen::MatrixXcd, 3> K;
  std::array<Eigen::MatrixXcd, 4> Gamma;
  Eigen::MatrixXcd g;
  std::vector<HalfInteger> gamma_labels;  // Gamma0 eigenvalue per basis state

  static FloatRep build(const LabeledBasis& basis) {
    FloatRep r;
    r.lambda = basis.lambda;
    r.n = static_cast<Eigen::Index>(basis.dimension());
    const Gen js[3] = {Gen::Jx, Gen::Jy, Gen::Jz};
    const Gen ks[3] = {Gen::K1, Gen::K2, Gen::K3};
    const Gen gs[4] = {Gen::Gamma0, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3};
    for (int k = 0; k < 3; ++k) {
      r.J[k] = to_float(generator_matrix(basis, js[k]));
      r.K[k] = to_float(generator_matrix(basis, ks[k]));
    }
    for (int k = 0; k < 4; ++k) r.Gamma[k] = to_float(generator_matrix(basis, gs[k]));
    r.g = to_float(spinor_metric_matrix(basis));
    for (const auto& [label, poly] : basis.states) r.gamma_labels.push_back(label.gamma);
    return r;
  }

  static FloatRep build(HalfInteger lambda, int lambda_cap = kDefaultLambdaCap) {
    return build(build_labeled_basis(lambda, lambda_cap));
  }
};

/// Gamma^mu p_mu = Gamma0 p0 - Gamma1 p1 - Gamma2 p2 - Gamma3 p3.
inline Eigen::MatrixXcd slash(const FloatRep& rep, const FourMomentum& p) {
  return rep.Gamma[0] * p.p0 - rep.Gamma[1] * p.p1 - rep.Gamma[2] * p.p2 -
         rep.Gamma[3] * p.p3;
}

inline Eigen::MatrixXcd slash(HalfInteger lambda, const FourMomentum& p) {
  return slash(FloatRep::build(lambda), p);
}

struct SpectrumResult {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd eigenvectors;  // columns
  double residual = 0;            // max_k |D v_k - lambda_k v_k| / |D|
};

/// Full eigendecomposition of the dispersion operator.  For timelike p the
/// spectrum is {gamma sqrt(p.p)} over the Gamma0 eigenvalues.  A nearly
/// defective eigenvector matrix (condition number above 1e12, as happens
/// for lightlike p) raises IllConditioned.
inline SpectrumResult spectrum(const FloatRep& rep, const FourMomentum& p) {
  Eigen::MatrixXcd d = slash(rep, p);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(d);
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  SpectrumResult res;
  res.eigenvalues = solver.eigenvalues();
  res.eigenvectors = solver.eigenvectors();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(res.eigenvectors);
  double smin = svd.singularValues().tail(1)(0);
  double smax = svd.singularValues()(0);
  if (smin <= 0 || smax / smin > 1e12)
    throw IllConditioned("eigenvector matrix condition number exceeds 1e12");

  double dnorm = d.norm();
  if (dnorm == 0) dnorm = 1;
  double worst = 0;
  for (Eigen::Index k = 0; k < rep.n; ++k) {
    double r = (d * res.eigenvectors.col(k) -
                res.eigenvalues(k) * res.eigenvectors.col(k))
                   .norm() /
               dnorm;
    worst = std::max(worst, r);
  }
  res.residual = worst;
  return res;
}

struct CurrentVector {
  std::complex<double> j0, j1, j2, j3;
  double conservation_residual = 0;  // |(p - p')_mu j^mu|
};

/// Cross current j^mu = (u')^dag g Gamma^mu u between two plane-wave modes
/// with equal dispersion eigenvalue at momenta p and p'.  Pseudo-hermiticity
/// of the Gamma matrices makes (p - p')_mu j^mu vanish.
inline CurrentVector plane_wave_current(const FloatRep& rep, const FourMomentum& p,
                                        const Eigen::VectorXcd& u,
                                        const FourMomentum& pprime,
                                        const Eigen::VectorXcd& uprime,
                                        double lambda_tolerance = 1e-9) {
  auto rayleigh = [](const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v) {
    return (v.adjoint() * m * v)(0) / (v.adjoint() * v)(0);
  };
  std::complex<double> lam = rayleigh(slash(rep, p), u);
  std::complex<double> lamp = rayleigh(slash(rep, pprime), uprime);
  if (std::abs(lam - lamp) > lambda_tolerance * std::max(1.0, std::abs(lam)))
    throw EigenvalueMismatch("plane-wave modes have different eigenvalues");

  CurrentVector out;
  Eigen::RowVectorXcd bra = uprime.adjoint() * rep.g;
  out.j0 = (bra * rep.Gamma[0] * u)(0);
  out.j1 = (bra * rep.Gamma[1] * u)(0);
  out.j2 = (bra * rep.Gamma[2] * u)(0);
  out.j3 = (bra * rep.Gamma[3] * u)(0);
  FourMomentum q = p - pprime;
  out.conservation_residual =
      std::abs(q.p0 * out.j0 - q.p1 * out.j1 - q.p2 * out.j2 - q.p3 * out.j3);
  return out;
}

enum class TransformKind { Rotation, Boost };

struct CovarianceResult {
  TransformKind kind;
  std::array<double, 3> axis;
  double parameter = 0;  // angle or rapidity
  double max_deviation = 0;
};

namespace detail {

/// Closed-form 4x4 vector transformation: Rodrigues rotation about a unit
/// axis, or a boost with cosh/sinh mixing Gamma0 into the axis direction.
inline Eigen::Matrix4d vector_transform(TransformKind kind, const std::array<double, 3>& n,
                                        double par) {
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  if (kind == TransformKind::Rotation) {
    double c = std::cos(par), s = std::sin(par);
    Eigen::Matrix3d nn;
    nn << n[0] * n[0], n[0] * n[1], n[0] * n[2],
          n[1] * n[0], n[1] * n[1], n[1] * n[2],
          n[2] * n[0], n[2] * n[1], n[2] * n[2];
    Eigen::Matrix3d cross;
    cross << 0, -n[2], n[1],
             n[2], 0, -n[0],
             -n[1], n[0], 0;
    L.block<3, 3>(1, 1) = c * Eigen::Matrix3d::Identity() + (1 - c) * nn + s * cross;
  } else {
    double ch = std::cosh(par), sh = std::sinh(par);
    L(0, 0) = ch;
    for (int k = 0; k < 3; ++k) {
      L(0, k + 1) = -sh * n[k];
      L(k + 1, 0) = -sh * n[k];
      for (int m = 0; m < 3; ++m) L(k + 1, m + 1) = (k == m ? 1.0 : 0.0) + (ch - 1) * n[k] * n[m];
    }
  }
  return L;
}

}  // namespace detail

/// S = exp(i theta n.J) or exp(i eta n.K), then check the vector law
/// S Gamma^mu S^-1 = L^mu_nu Gamma^nu against the closed-form 4x4 matrix.
/// The exponential uses scaling-and-squaring Pade (Eigen MatrixFunctions).
inline CovarianceResult covariance_check(const FloatRep& rep, TransformKind kind,
                                         const std::array<double, 3>& axis, double par) {
  double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (len == 0) throw Error("transformation axis must be nonzero");
  std::array<double, 3> n = {axis[0] / len, axis[1] / len, axis[2] / len};

  const auto& gens = kind == TransformKind::Rotation ? rep.J : rep.K;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rep.n, rep.n);
  for (int k = 0; k < 3; ++k) a += std::complex<double>(0, par * n[k]) * gens[k];
  Eigen::MatrixXcd s = a.exp();
  Eigen::MatrixXcd sinv = s.partialPivLu().solve(Eigen::MatrixXcd::Identity(rep.n, rep.n));

  Eigen::Matrix4d L = detail::vector_transform(kind, n, par);
  CovarianceResult res{kind, n, par, 0};
  for (int mu = 0; mu < 4; ++mu) {
    Eigen::MatrixXcd lhs = s * rep.Gamma[mu] * sinv;
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(rep.n, rep.n);
    for (int nu = 0; nu < 4; ++nu) rhs += L(mu, nu) * rep.Gamma[nu];
    res.max_deviation = std::max(res.max_deviation, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return res;
}

}  // namespace exlorentz
