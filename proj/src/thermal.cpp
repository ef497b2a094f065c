#include "hchain/thermal.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "hchain/errors.hpp"

namespace hchain {

namespace {

void check_temperature(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("temperature must be positive and finite");
}

constexpr double kLowestProbe = 1e-3;
constexpr double kFirstBracket = 0.1;
constexpr double kHighestProbe = 100.0;

}  // namespace

GibbsEnsemble::GibbsEnsemble(const Spectrum& spectrum, double temperature) : temperature_(temperature) {
  check_temperature(temperature);
  const auto pairs = spectrum.eigenpairs();
  const double e0 = spectrum.ground_energy();
  weights_.resize(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t n = 0; n < pairs.size(); ++n)
    weights_[static_cast<Eigen::Index>(n)] = std::exp(-(pairs[n].energy - e0) / temperature);
  const double shifted_z = weights_.sum();
  weights_ /= shifted_z;
  log_z_ = std::log(shifted_z) - e0 / temperature;
}

Eigen::VectorXd eigenstate_expectations(const Spectrum& spectrum, const BlockOperator& op, Execution exec) {
  const std::size_t n_sectors = spectrum.space().num_sectors();
  std::vector<Eigen::VectorXd> per_sector(n_sectors);
  auto kernel = [&](std::size_t s) {
    const Eigen::MatrixXd& v = spectrum.sector_vectors(s);
    const Eigen::MatrixXd image = op.block(s) * v;
    per_sector[s] = v.cwiseProduct(image).colwise().sum().transpose();
  };
  const auto count = static_cast<long>(n_sectors);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < count; ++s) kernel(static_cast<std::size_t>(s));
  } else {
    for (long s = 0; s < count; ++s) kernel(static_cast<std::size_t>(s));
  }

  const auto pairs = spectrum.eigenpairs();
  Eigen::VectorXd out(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t n = 0; n < pairs.size(); ++n)
    out[static_cast<Eigen::Index>(n)] = per_sector[pairs[n].sector][static_cast<Eigen::Index>(pairs[n].index)];
  return out;
}

double gibbs_expectation(const Spectrum& spectrum, double temperature, const BlockOperator& op) {
  const GibbsEnsemble ensemble(spectrum, temperature);
  return ensemble.weights().dot(eigenstate_expectations(spectrum, op));
}

ThermalBond::ThermalBond(const Spectrum& spectrum, int i, int j, Execution exec)
    : spectrum_(&spectrum), i_(i), j_(j), spin_(spectrum.space().spec().spin) {
  const BondOperators ops = bond_operators(spectrum.space_ptr(), i, j);
  spin_dot_ = eigenstate_expectations(spectrum, ops.spin_dot, exec);
  spin_dot_sq_ = eigenstate_expectations(spectrum, ops.spin_dot_sq, exec);
  swap_ = eigenstate_expectations(spectrum, ops.swap, exec);

  const auto pairs = spectrum.eigenpairs();
  const int d = spectrum.space().local_dim();
  pure_rdms_.assign(pairs.size(), Eigen::MatrixXd::Zero(d * d, d * d));
  const auto count = static_cast<long>(pairs.size());
  auto kernel = [&](long n) {
    accumulate_rdm(spectrum.full_vector(pairs[static_cast<std::size_t>(n)]), 1.0, spectrum.space(), i, j,
                   pure_rdms_[static_cast<std::size_t>(n)]);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long n = 0; n < count; ++n) kernel(n);
  } else {
    for (long n = 0; n < count; ++n) kernel(n);
  }
}

BondExpectations ThermalBond::expectations(double temperature) const {
  const GibbsEnsemble ensemble(*spectrum_, temperature);
  const Eigen::VectorXd& w = ensemble.weights();
  return {spin_, w.dot(spin_dot_), w.dot(spin_dot_sq_), w.dot(swap_)};
}

TwoSiteRDM ThermalBond::rdm(double temperature) const {
  const GibbsEnsemble ensemble(*spectrum_, temperature);
  const int d = spectrum_->space().local_dim();
  TwoSiteRDM out{Eigen::MatrixXd::Zero(d * d, d * d), i_, j_, d};
  for (std::size_t n = 0; n < pure_rdms_.size(); ++n)
    out.matrix += ensemble.weights()[static_cast<Eigen::Index>(n)] * pure_rdms_[n];
  return out;
}

double ThermalBond::measure(double temperature) const {
  const BondExpectations be = expectations(temperature);
  return spin_ == SpinKind::Half ? concurrence_su2(be) : negativity_su2(be);
}

double ThermalBond::oracle_measure(double temperature) const {
  const TwoSiteRDM r = rdm(temperature);
  return spin_ == SpinKind::Half ? wootters_concurrence(r) : pt_negativity(r);
}

double thermal_concurrence(const ChainSpec& spec, int i, int j, double temperature) {
  check_measure(spec.spin, Measure::Concurrence);
  check_temperature(temperature);
  const SpacePtr space = make_space(spec);
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const BondOperators ops = bond_operators(space, i, j);
  return std::max(0.0, -gibbs_expectation(spectrum, temperature, ops.swap));
}

double thermal_negativity(const ChainSpec& spec, int i, int j, double temperature) {
  check_measure(spec.spin, Measure::Negativity);
  check_temperature(temperature);
  const SpacePtr space = make_space(spec);
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const BondOperators ops = bond_operators(space, i, j);
  const double h1 = gibbs_expectation(spectrum, temperature, ops.spin_dot);
  const double h2 = gibbs_expectation(spectrum, temperature, ops.spin_dot_sq);
  return 0.5 * std::max(0.0, h2 - 2.0) + std::max(0.0, 1.0 - h1 - h2) / 3.0;
}

GridScale parse_grid_scale(std::string_view text) {
  if (text == "lin" || text == "linear") return GridScale::Linear;
  if (text == "log") return GridScale::Log;
  throw std::invalid_argument("unknown temperature scale '" + std::string(text) + "'");
}

std::vector<double> temperature_grid(double tmin, double tmax, int steps, GridScale scale) {
  if (steps < 1) throw std::invalid_argument("temperature grid needs at least one point");
  check_temperature(tmin);
  check_temperature(tmax);
  if (steps > 1 && !(tmax > tmin)) throw std::invalid_argument("tmax must exceed tmin");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double f = steps == 1 ? 0.0 : static_cast<double>(k) / (steps - 1);
    grid[static_cast<std::size_t>(k)] =
        scale == GridScale::Linear ? tmin + f * (tmax - tmin)
                                   : std::exp(std::log(tmin) + f * (std::log(tmax) - std::log(tmin)));
  }
  grid.back() = tmax;
  return grid;
}

ThermalCurve thermal_scan(const ThermalBond& bond, std::span<const double> grid, Execution exec) {
  if (grid.empty()) throw std::invalid_argument("temperature grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    check_temperature(grid[k]);
    if (k > 0 && !(grid[k] > grid[k - 1])) throw std::invalid_argument("temperature grid must be strictly increasing");
  }
  ThermalCurve curve;
  curve.spec = bond.spec();
  curve.site_i = bond.site_i();
  curve.site_j = bond.site_j();
  curve.measure = natural_measure(bond.spin());
  curve.temperatures.assign(grid.begin(), grid.end());
  curve.values.resize(grid.size());
  const auto count = static_cast<long>(grid.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long k = 0; k < count; ++k) curve.values[static_cast<std::size_t>(k)] = bond.measure(grid[static_cast<std::size_t>(k)]);
  } else {
    for (long k = 0; k < count; ++k) curve.values[static_cast<std::size_t>(k)] = bond.measure(grid[static_cast<std::size_t>(k)]);
  }
  return curve;
}

ThermalCurve thermal_scan(const ChainSpec& spec, int i, int j, std::span<const double> grid, Measure measure,
                          Execution exec) {
  check_measure(spec.spin, measure);
  if (grid.empty()) throw std::invalid_argument("temperature grid is empty");
  const SpacePtr space = make_space(spec);
  const Spectrum spectrum = diagonalize(build_hamiltonian(space), exec);
  const ThermalBond bond(spectrum, i, j, exec);
  return thermal_scan(bond, grid, exec);
}

std::string_view to_string(RootTerm term) {
  switch (term) {
    case RootTerm::NegatedSwap: return "negated_swap";
    case RootTerm::Quadratic: return "quadratic";
    case RootTerm::SwapComplement: return "swap_complement";
  }
  return "unknown";
}

namespace {

double root_argument(const ThermalBond& bond, RootTerm term, double t) {
  const BondExpectations be = bond.expectations(t);
  switch (term) {
    case RootTerm::NegatedSwap: return -be.swap;
    case RootTerm::Quadratic: return negativity_arguments(be).quadratic;
    case RootTerm::SwapComplement: return negativity_arguments(be).swap_complement;
  }
  return 0.0;
}

ThresholdResult bisect_root(const ThermalBond& bond, RootTerm term, double tol) {
  auto f = [&](double t) { return root_argument(bond, term, t); };
  double lo = f(kFirstBracket) > 0.0 ? kFirstBracket : kLowestProbe;
  double hi = 2.0 * kFirstBracket;
  while (f(hi) > 0.0) {
    if (hi >= kHighestProbe) throw ComputationError("no upper bracket: entanglement persists at T = 100");
    lo = hi;
    hi *= 2.0;
  }
  ThresholdResult result;
  result.root_term = term;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
    ++result.iterations;
  }
  result.temperature = 0.5 * (lo + hi);
  result.bracket_width = hi - lo;
  return result;
}

}  // namespace

ThresholdResult threshold_temperature(const ThermalBond& bond, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("threshold tolerance must be positive");
  if (bond.spin() == SpinKind::Half) {
    if (!(root_argument(bond, RootTerm::NegatedSwap, kLowestProbe) > 0.0))
      throw ComputationError("no entanglement at any T");
    return bisect_root(bond, RootTerm::NegatedSwap, tol);
  }
  // Spin-1: follow whichever positive max-term survives to the highest temperature.
  std::optional<ThresholdResult> best;
  for (RootTerm term : {RootTerm::Quadratic, RootTerm::SwapComplement}) {
    if (!(root_argument(bond, term, kLowestProbe) > 0.0)) continue;
    const ThresholdResult candidate = bisect_root(bond, term, tol);
    if (!best || candidate.temperature > best->temperature) best = candidate;
  }
  if (!best) throw ComputationError("no entanglement at any T");
  return *best;
}

ThresholdResult threshold_temperature(const ChainSpec& spec, int i, int j, double tol) {
  const SpacePtr space = make_space(spec);
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const ThermalBond bond(spectrum, i, j);
  return threshold_temperature(bond, tol);
}

}  // namespace hchain
