#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hchain/hamiltonian.hpp"
#include "hchain/parallel.hpp"
#include "hchain/state.hpp"

namespace hchain {

inline constexpr double kDefaultDegeneracyTol = 1e-9;

struct Eigenpair {
  double energy;
  std::size_t sector;
  std::size_t index;  // column within the sector's eigenvector matrix
};

/// Full eigendecomposition of a sector-blocked operator.
class Spectrum {
 public:
  Spectrum(SpacePtr space, std::vector<Eigen::VectorXd> energies,
           std::vector<Eigen::MatrixXd> vectors);

  const HilbertSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }

  /// Ascending eigenvalues of one sector.
  const Eigen::VectorXd& sector_energies(std::size_t s) const { return energies_.at(s); }
  /// Orthonormal eigenvectors (columns) of one sector, in sector-local coordinates.
  const Eigen::MatrixXd& sector_vectors(std::size_t s) const { return vectors_.at(s); }

  /// All eigenpairs sorted by (energy, sector, index).
  std::span<const Eigenpair> eigenpairs() const noexcept { return merged_; }
  std::size_t size() const noexcept { return merged_.size(); }
  double ground_energy() const { return merged_.front().energy; }

  Eigen::VectorXd full_vector(const Eigenpair& pair) const;

 private:
  SpacePtr space_;
  std::vector<Eigen::VectorXd> energies_;
  std::vector<Eigen::MatrixXd> vectors_;
  std::vector<Eigenpair> merged_;
};

/// Dense symmetric diagonalization of every sector block. Throws ComputationError naming the
/// sector if the eigensolver fails.
Spectrum diagonalize(const BlockOperator& op, Execution exec = Execution::Parallel);

/// Degenerate multiplet of a spectrum.
struct EnergyLevel {
  std::size_t index = 0;  // 0 = ground
  double energy = 0.0;
  std::size_t degeneracy = 0;
  std::vector<Eigenpair> members;
  Eigen::MatrixXd basis;  // d^L x degeneracy, orthonormal columns
};

/// Groups sorted eigenvalues into levels; neighbours merge when
/// |E_a - E_b| <= tol * max(1, |E_a|), chained transitively.
std::vector<EnergyLevel> group_levels(const Spectrum& spectrum, double tol = kDefaultDegeneracyTol);

/// Uniform mixture over the eigenspace of level k.
QuantumState level_state(std::span<const EnergyLevel> levels, std::size_t k);

}  // namespace hchain
