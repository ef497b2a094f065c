#include "hchain/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "hchain/state.hpp"

namespace hchain {

namespace {

constexpr double kNormTol = 1e-12;

SpinKind spin_of_dim(int d) { return d == 2 ? SpinKind::Half : SpinKind::One; }

}  // namespace

QuantumState::QuantumState(Eigen::MatrixXd vectors, Eigen::VectorXd weights)
    : vectors_(std::move(vectors)), weights_(std::move(weights)) {}

QuantumState QuantumState::pure(Eigen::VectorXd vector) {
  if (std::abs(vector.norm() - 1.0) > kNormTol) throw std::invalid_argument("state vector is not normalized");
  Eigen::MatrixXd columns = std::move(vector);
  return QuantumState(std::move(columns), Eigen::VectorXd::Ones(1));
}

QuantumState QuantumState::mixture(Eigen::MatrixXd vectors, Eigen::VectorXd weights) {
  if (vectors.cols() != weights.size() || weights.size() == 0)
    throw std::invalid_argument("mixture needs one weight per vector");
  if ((weights.array() < 0.0).any()) throw std::invalid_argument("mixture weights must be nonnegative");
  if (std::abs(weights.sum() - 1.0) > kNormTol) throw std::invalid_argument("mixture weights must sum to 1");
  const Eigen::MatrixXd gram = vectors.transpose() * vectors;
  if (!gram.isIdentity(1e-10)) throw std::invalid_argument("mixture vectors must be orthonormal");
  return QuantumState(std::move(vectors), std::move(weights));
}

Eigen::MatrixXd QuantumState::density_matrix() const {
  return vectors_ * weights_.asDiagonal() * vectors_.transpose();
}

double expectation(const QuantumState& state, const BlockOperator& op) {
  if (static_cast<std::uint64_t>(state.dimension()) != op.space().dimension())
    throw std::invalid_argument("state and operator dimensions differ");
  double total = 0.0;
  for (Eigen::Index n = 0; n < state.rank(); ++n) {
    const auto v = state.vectors().col(n);
    total += state.weights()[n] * v.dot(op.apply(v));
  }
  return total;
}

BondExpectations bond_expectations(const QuantumState& state, const BondOperators& ops) {
  return {ops.spin_dot.space().spec().spin, expectation(state, ops.spin_dot),
          expectation(state, ops.spin_dot_sq), expectation(state, ops.swap)};
}

BondExpectations bond_expectations(const QuantumState& state, const SpacePtr& space, int i, int j) {
  return bond_expectations(state, bond_operators(space, i, j));
}

void accumulate_rdm(const Eigen::Ref<const Eigen::VectorXd>& psi, double w, const HilbertSpace& space,
                    int i, int j, Eigen::Ref<Eigen::MatrixXd> rdm) {
  const int d = space.local_dim();
  const Config pi = space.place_value(i);
  const Config pj = space.place_value(j);
  // Each environment configuration has digits i and j equal to zero.
  for (Config env = 0; env < space.dimension(); ++env) {
    if (space.digit(env, i) != 0 || space.digit(env, j) != 0) continue;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double left = psi[static_cast<Eigen::Index>(env + a * pi + b * pj)];
        if (left == 0.0) continue;
        for (int a2 = 0; a2 < d; ++a2)
          for (int b2 = 0; b2 < d; ++b2)
            rdm(a * d + b, a2 * d + b2) +=
                w * left * psi[static_cast<Eigen::Index>(env + a2 * pi + b2 * pj)];
      }
  }
}

TwoSiteRDM reduced_density_matrix(const QuantumState& state, const HilbertSpace& space, int i, int j) {
  space.check_pair(i, j);
  if (static_cast<std::uint64_t>(state.dimension()) != space.dimension())
    throw std::invalid_argument("state dimension does not match the chain");
  const int d = space.local_dim();
  TwoSiteRDM rdm{Eigen::MatrixXd::Zero(d * d, d * d), i, j, d};
  for (Eigen::Index n = 0; n < state.rank(); ++n)
    accumulate_rdm(state.vectors().col(n), state.weights()[n], space, i, j, rdm.matrix);
  return rdm;
}

Eigen::MatrixXd pair_spin_dot(SpinKind spin) {
  const LocalSpinMatrices m = local_spin_matrices(spin);
  const auto d = m.sz.rows();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (const auto* s : {&m.sx, &m.sy, &m.sz})
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        total.block(a * d, b * d, d, d) += (*s)(a, b) * (*s);
  return total.real();
}

Eigen::MatrixXd pair_swap(int d) {
  Eigen::MatrixXd swap = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) swap(b * d + a, a * d + b) = 1.0;
  return swap;
}

BondExpectations rdm_bond_expectations(const TwoSiteRDM& rdm) {
  const SpinKind spin = spin_of_dim(rdm.local_dim);
  const Eigen::MatrixXd h1 = pair_spin_dot(spin);
  return {spin, (rdm.matrix * h1).trace(), (rdm.matrix * h1 * h1).trace(),
          (rdm.matrix * pair_swap(rdm.local_dim)).trace()};
}

}  // namespace hchain
