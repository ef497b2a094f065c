#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hchain/hilbert.hpp"

namespace hchain {

/// Real symmetric operator that conserves total S^z, stored as one sparse block per sector.
class BlockOperator {
 public:
  using Block = Eigen::SparseMatrix<double>;

  BlockOperator(SpacePtr space, std::vector<Block> blocks);

  const HilbertSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t s) const { return blocks_.at(s); }
  Eigen::MatrixXd dense_block(std::size_t s) const { return Eigen::MatrixXd(blocks_.at(s)); }

  /// Apply to a vector in the full configuration basis.
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& full) const;
  /// Dense d^L x d^L matrix in configuration order.
  Eigen::MatrixXd to_dense() const;
  /// Largest |A - A^T| entry over all blocks.
  double max_asymmetry() const;

  BlockOperator& operator+=(const BlockOperator& other);
  BlockOperator& operator*=(double factor);

 private:
  SpacePtr space_;
  std::vector<Block> blocks_;
};

BlockOperator operator+(BlockOperator lhs, const BlockOperator& rhs);
BlockOperator operator*(double factor, BlockOperator op);

BlockOperator identity_operator(const SpacePtr& space);

/// S_i · S_j.
BlockOperator spin_dot_operator(const SpacePtr& space, int i, int j);
/// Permutation of the local states of sites i and j.
BlockOperator swap_operator(const SpacePtr& space, int i, int j);

/// Open-chain Heisenberg Hamiltonian. Spin-1/2: sum of J(2 S_i·S_{i+1} + 1/2), which equals J
/// times the sum of nearest-neighbour swaps. Spin-1: sum of J S_i·S_{i+1}.
BlockOperator build_hamiltonian(const SpacePtr& space);

struct BondOperators {
  BlockOperator spin_dot;     // S_i·S_j
  BlockOperator spin_dot_sq;  // (S_i·S_j)^2
  BlockOperator swap;
};

BondOperators bond_operators(const SpacePtr& space, int i, int j);

}  // namespace hchain
