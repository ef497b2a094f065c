#pragma once

#include <Eigen/Dense>

namespace hchain {

/// A pure state or a convex mixture of orthonormal vectors in the full configuration basis.
/// Mixtures are never expanded into a d^L x d^L density matrix.
class QuantumState {
 public:
  static QuantumState pure(Eigen::VectorXd vector);
  /// Columns of `vectors` are the constituents; weights must be nonnegative and sum to 1.
  static QuantumState mixture(Eigen::MatrixXd vectors, Eigen::VectorXd weights);

  Eigen::Index dimension() const noexcept { return vectors_.rows(); }
  Eigen::Index rank() const noexcept { return vectors_.cols(); }
  bool is_pure() const noexcept { return vectors_.cols() == 1; }
  const Eigen::MatrixXd& vectors() const noexcept { return vectors_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }

  /// Materialized density matrix; intended for small chains and tests.
  Eigen::MatrixXd density_matrix() const;

 private:
  QuantumState(Eigen::MatrixXd vectors, Eigen::VectorXd weights);

  Eigen::MatrixXd vectors_;
  Eigen::VectorXd weights_;
};

}  // namespace hchain
