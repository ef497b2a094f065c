#pragma once

#include <Eigen/Dense>

#include "hchain/hamiltonian.hpp"
#include "hchain/state.hpp"

namespace hchain {

/// Expectations of the three SU(2)-invariant bond observables for one site pair.
struct BondExpectations {
  SpinKind spin = SpinKind::Half;
  double spin_dot = 0.0;     // <S_i·S_j>
  double spin_dot_sq = 0.0;  // <(S_i·S_j)^2>
  double swap = 0.0;         // <swap_ij>
};

/// Two-site reduced density matrix. Pair basis index is a_i * d + a_j.
struct TwoSiteRDM {
  Eigen::MatrixXd matrix;
  int site_i = 1;
  int site_j = 2;
  int local_dim = 2;
};

/// Tr[op rho], evaluated vector by vector for mixtures.
double expectation(const QuantumState& state, const BlockOperator& op);

BondExpectations bond_expectations(const QuantumState& state, const BondOperators& ops);
BondExpectations bond_expectations(const QuantumState& state, const SpacePtr& space, int i, int j);

TwoSiteRDM reduced_density_matrix(const QuantumState& state, const HilbertSpace& space, int i, int j);

/// Pure-state partial trace keeping sites i and j, accumulated into `rdm` with weight `w`.
void accumulate_rdm(const Eigen::Ref<const Eigen::VectorXd>& psi, double w, const HilbertSpace& space,
                    int i, int j, Eigen::Ref<Eigen::MatrixXd> rdm);

/// S·S on a pair of sites, as a d^2 x d^2 matrix built from the local spin matrices.
Eigen::MatrixXd pair_spin_dot(SpinKind spin);
/// Swap of two d-level sites.
Eigen::MatrixXd pair_swap(int local_dim);

/// Bond expectations evaluated on the reduced density matrix.
BondExpectations rdm_bond_expectations(const TwoSiteRDM& rdm);

}  // namespace hchain
