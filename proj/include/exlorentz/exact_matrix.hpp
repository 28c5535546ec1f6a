#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exlorentz/basis.hpp"

namespace exlorentz {

/// Dense square matrix over ComplexScalar.  Column-acts convention
/// throughout: G psi_j = sum_i entries(i, j) psi_i.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ComplexScalar(1);
    return m;
  }

  std::size_t size() const { return n_; }

  ComplexScalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const ComplexScalar& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    check_dims(x, y);
    ExactMatrix out(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
    return out;
  }
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    check_dims(x, y);
    ExactMatrix out(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] - y.a_[k];
    return out;
  }
  friend ExactMatrix operator-(const ExactMatrix& x) {
    ExactMatrix out(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = -x.a_[k];
    return out;
  }
  friend ExactMatrix operator*(const ComplexScalar& s, const ExactMatrix& x) {
    ExactMatrix out(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = s * x.a_[k];
    return out;
  }
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    check_dims(x, y);
    ExactMatrix out(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const ComplexScalar& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) {
          const ComplexScalar& ykj = y(k, j);
          if (ykj.is_zero()) continue;
          out(i, j) += xik * ykj;
        }
      }
    return out;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  /// Conjugate transpose.
  ExactMatrix adjoint() const {
    ExactMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Largest |entry| as a float; zero iff the matrix is exactly zero.
  double max_abs() const {
    double m = 0.0;
    for (const auto& c : a_) {
      double v = std::abs(c.to_complex());
      if (v > m) m = v;
    }
    return m;
  }

 private:
  static void check_dims(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.n_ != y.n_)
      throw DimensionMismatch("matrix dimensions " + std::to_string(x.n_) + " vs " +
                              std::to_string(y.n_));
  }

  std::size_t n_ = 0;
  std::vector<ComplexScalar> a_;
};

/// AB - BA, exactly.
inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

/// Named exact matrix of one generator in a labeled basis.
struct GeneratorMatrix {
  Gen gen;
  ExactMatrix mat;
};

/// entries(i, j) = <psi_i, G psi_j>.
inline ExactMatrix generator_matrix(const LabeledBasis& basis, Gen g) {
  const std::size_t n = basis.dimension();
  ExactMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    SpinorPolynomial image = apply_generator(g, basis.states[j].second);
    if (image.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      out(i, j) = inner_product(basis.states[i].second, image);
  }
  return out;
}

/// Diagonal spinor metric g = (-1)^(Lambda - gamma), one entry per state.
inline std::vector<ComplexScalar> spinor_metric(const LabeledBasis& basis) {
  std::vector<ComplexScalar> diag;
  diag.reserve(basis.dimension());
  for (const auto& [label, poly] : basis.states) {
    int k = (basis.lambda.twice - label.gamma.twice) / 2;
    diag.emplace_back(k % 2 == 0 ? 1 : -1);
  }
  return diag;
}

inline ExactMatrix spinor_metric_matrix(const LabeledBasis& basis) {
  auto diag = spinor_metric(basis);
  ExactMatrix g(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
  return g;
}

/// Matrix of the charge-conjugation involution: P(i, j) = <psi_i, bar psi_j>.
/// Squares to the identity and conjugates Gamma^mu to -Gamma^mu while fixing
/// J and K.
inline ExactMatrix bar_involution_matrix(const LabeledBasis& basis) {
  const std::size_t n = basis.dimension();
  ExactMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    SpinorPolynomial image = bar_map(basis.states[j].second);
    for (std::size_t i = 0; i < n; ++i)
      out(i, j) = inner_product(basis.states[i].second, image);
  }
  return out;
}

}  // namespace exlorentz
