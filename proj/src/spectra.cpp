#include "hchain/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "hchain/errors.hpp"

namespace hchain {

Spectrum::Spectrum(SpacePtr space, std::vector<Eigen::VectorXd> energies,
                   std::vector<Eigen::MatrixXd> vectors)
    : space_(std::move(space)), energies_(std::move(energies)), vectors_(std::move(vectors)) {
  if (energies_.size() != space_->num_sectors() || vectors_.size() != space_->num_sectors())
    throw std::invalid_argument("spectrum needs one eigensystem per sector");
  for (std::size_t s = 0; s < energies_.size(); ++s)
    for (Eigen::Index k = 0; k < energies_[s].size(); ++k)
      merged_.push_back({energies_[s][k], s, static_cast<std::size_t>(k)});
  std::sort(merged_.begin(), merged_.end(), [](const Eigenpair& a, const Eigenpair& b) {
    return std::tie(a.energy, a.sector, a.index) < std::tie(b.energy, b.sector, b.index);
  });
}

Eigen::VectorXd Spectrum::full_vector(const Eigenpair& pair) const {
  return space_->embed(pair.sector, vectors_.at(pair.sector).col(static_cast<Eigen::Index>(pair.index)));
}

Spectrum diagonalize(const BlockOperator& op, Execution exec) {
  const std::size_t n = op.num_blocks();
  std::vector<Eigen::VectorXd> energies(n);
  std::vector<Eigen::MatrixXd> vectors(n);
  std::vector<char> failed(n, 0);

  auto solve = [&](std::size_t s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense_block(s));
    if (solver.info() != Eigen::Success) {
      failed[s] = 1;
      return;
    }
    energies[s] = solver.eigenvalues();
    vectors[s] = solver.eigenvectors();
  };

  const auto count = static_cast<long>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < count; ++s) solve(static_cast<std::size_t>(s));
  } else {
    for (long s = 0; s < count; ++s) solve(static_cast<std::size_t>(s));
  }

  for (std::size_t s = 0; s < n; ++s)
    if (failed[s])
      throw ComputationError("eigensolver did not converge in sector with 2m = " +
                             std::to_string(op.space().sector(s).twice_magnetization()));
  return Spectrum(op.space_ptr(), std::move(energies), std::move(vectors));
}

std::vector<EnergyLevel> group_levels(const Spectrum& spectrum, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be positive");
  const auto pairs = spectrum.eigenpairs();
  std::vector<EnergyLevel> levels;
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const bool extends =
        n > 0 && std::abs(pairs[n].energy - pairs[n - 1].energy) <=
                     tol * std::max(1.0, std::abs(pairs[n - 1].energy));
    if (!extends) {
      levels.emplace_back();
      levels.back().index = levels.size() - 1;
    }
    levels.back().members.push_back(pairs[n]);
  }

  const auto dim = static_cast<Eigen::Index>(spectrum.space().dimension());
  for (auto& level : levels) {
    level.degeneracy = level.members.size();
    level.basis.resize(dim, static_cast<Eigen::Index>(level.degeneracy));
    double sum = 0.0;
    for (std::size_t m = 0; m < level.members.size(); ++m) {
      sum += level.members[m].energy;
      level.basis.col(static_cast<Eigen::Index>(m)) = spectrum.full_vector(level.members[m]);
    }
    level.energy = sum / static_cast<double>(level.degeneracy);
  }
  return levels;
}

QuantumState level_state(std::span<const EnergyLevel> levels, std::size_t k) {
  if (k >= levels.size())
    throw std::out_of_range("level index " + std::to_string(k) + " out of range (" +
                            std::to_string(levels.size()) + " levels)");
  const EnergyLevel& level = levels[k];
  const auto g = static_cast<Eigen::Index>(level.degeneracy);
  return QuantumState::mixture(level.basis, Eigen::VectorXd::Constant(g, 1.0 / static_cast<double>(g)));
}

}  // namespace hchain
