#include "hchain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hchain {

namespace {

void require_spin(const BondExpectations& be, SpinKind expected, std::string_view what) {
  if (be.spin != expected)
    throw std::invalid_argument(std::string(what) + " applies only to spin-" +
                                std::string(to_string(expected)) + " pairs");
}

int sign(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

}  // namespace

std::string_view to_string(Measure measure) {
  return measure == Measure::Concurrence ? "concurrence" : "negativity";
}

Measure parse_measure(std::string_view text) {
  if (text == "concurrence") return Measure::Concurrence;
  if (text == "negativity") return Measure::Negativity;
  throw std::invalid_argument("unknown measure '" + std::string(text) + "'");
}

Measure natural_measure(SpinKind spin) {
  return spin == SpinKind::Half ? Measure::Concurrence : Measure::Negativity;
}

void check_measure(SpinKind spin, Measure measure) {
  if (measure != natural_measure(spin))
    throw std::invalid_argument(std::string(to_string(measure)) + " is not defined here for spin-" +
                                std::string(to_string(spin)) + " chains");
}

double concurrence_su2(const BondExpectations& be) {
  require_spin(be, SpinKind::Half, "concurrence");
  return std::max(0.0, -be.swap);
}

double negativity_su2(const BondExpectations& be) {
  require_spin(be, SpinKind::One, "negativity");
  return 0.5 * std::max(0.0, be.swap - be.spin_dot - 1.0) + std::max(0.0, -be.swap) / 3.0;
}

NegativityArguments negativity_arguments(const BondExpectations& be) {
  require_spin(be, SpinKind::One, "negativity");
  return {be.spin_dot_sq - 2.0, 1.0 - be.spin_dot - be.spin_dot_sq};
}

double wootters_concurrence(const TwoSiteRDM& rdm) {
  if (rdm.local_dim != 2 || rdm.matrix.rows() != 4)
    throw std::invalid_argument("Wootters concurrence requires a two-qubit state");
  // sigma_y (x) sigma_y is real; the states here are real so rho* = rho.
  Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Eigen::Matrix4d rho = rdm.matrix;

  // lambda are the singular values of sqrt(rho) sqrt(tilde), with sqrt(tilde) = flip sqrt(rho) flip.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> rho_eig(rho);
  const Eigen::Vector4d root_vals = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4d root = rho_eig.eigenvectors() * root_vals.asDiagonal() * rho_eig.eigenvectors().transpose();
  const Eigen::Matrix4d product = root * flip * root * flip;
  Eigen::Vector4d lambda = Eigen::JacobiSVD<Eigen::Matrix4d>(product).singularValues();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double pt_negativity(const TwoSiteRDM& rdm) {
  const int d = rdm.local_dim;
  if (rdm.matrix.rows() != d * d || rdm.matrix.cols() != d * d)
    throw std::invalid_argument("reduced density matrix has the wrong shape");
  Eigen::MatrixXd pt(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2) pt(a * d + b, a2 * d + b2) = rdm.matrix(a * d + b2, a2 * d + b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pt, Eigen::EigenvaluesOnly);
  double negativity = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
    if (eig.eigenvalues()[k] < 0.0) negativity -= eig.eigenvalues()[k];
  return negativity;
}

PairEntanglement pair_entanglement(const QuantumState& state, const SpacePtr& space, int i, int j,
                                   Measure measure) {
  check_measure(space->spec().spin, measure);
  const BondExpectations be = bond_expectations(state, space, i, j);
  const TwoSiteRDM rdm = reduced_density_matrix(state, *space, i, j);
  if (measure == Measure::Concurrence) return {concurrence_su2(be), wootters_concurrence(rdm)};
  return {negativity_su2(be), pt_negativity(rdm)};
}

EntanglementProfile bond_profile(std::span<const EnergyLevel> levels, const SpacePtr& space,
                                 std::size_t k, Measure measure) {
  check_measure(space->spec().spin, measure);
  const QuantumState state = level_state(levels, k);
  EntanglementProfile profile{space->spec(), k, measure, {}, {}};
  for (int i = 1; i < space->length(); ++i) {
    const PairEntanglement e = pair_entanglement(state, space, i, i + 1, measure);
    profile.values.push_back(e.closed_form);
    profile.oracle.push_back(e.oracle);
  }
  return profile;
}

EntanglementProfile bond_profile(const ChainSpec& spec, std::size_t k, Measure measure,
                                 double degeneracy_tol) {
  check_measure(spec.spin, measure);
  const SpacePtr space = make_space(spec);
  const auto levels = group_levels(diagonalize(build_hamiltonian(space)), degeneracy_tol);
  return bond_profile(levels, space, k, measure);
}

PhaseComparison compare_phases(std::span<const double> a, std::span<const double> b, double flat_tol) {
  if (a.size() != b.size()) throw std::invalid_argument("profiles must have equal length");
  PhaseComparison result;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const int sa = sign(a[i + 1] - a[i], flat_tol);
    const int sb = sign(b[i + 1] - b[i], flat_tol);
    ++result.total;
    if (sa != 0 && sa == sb) ++result.same;
    if (sa != 0 && sa == -sb) ++result.opposite;
  }
  return result;
}

}  // namespace hchain
