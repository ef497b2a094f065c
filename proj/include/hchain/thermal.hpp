#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hchain/entanglement.hpp"
#include "hchain/parallel.hpp"
#include "hchain/spectra.hpp"

namespace hchain {

/// Boltzmann weights of a spectrum at temperature T (k_B = 1), in Spectrum::eigenpairs() order.
class GibbsEnsemble {
 public:
  GibbsEnsemble(const Spectrum& spectrum, double temperature);

  double temperature() const noexcept { return temperature_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  double log_partition_function() const noexcept { return log_z_; }
  /// May overflow to +inf at very low T; prefer log_partition_function().
  double partition_function() const { return std::exp(log_z_); }

 private:
  double temperature_;
  Eigen::VectorXd weights_;
  double log_z_;
};

/// <v_n|op|v_n> for every eigenpair, in Spectrum::eigenpairs() order.
Eigen::VectorXd eigenstate_expectations(const Spectrum& spectrum, const BlockOperator& op,
                                        Execution exec = Execution::Parallel);

/// Tr[op exp(-H/T)] / Z.
double gibbs_expectation(const Spectrum& spectrum, double temperature, const BlockOperator& op);

/// Thermal data for one site pair. Per-eigenstate expectations and reduced density matrices are
/// computed once, so evaluating many temperatures is cheap. The spectrum must outlive the bond.
class ThermalBond {
 public:
  ThermalBond(const Spectrum& spectrum, int i, int j, Execution exec = Execution::Parallel);

  int site_i() const noexcept { return i_; }
  int site_j() const noexcept { return j_; }
  SpinKind spin() const noexcept { return spin_; }
  const ChainSpec& spec() const noexcept { return spectrum_->space().spec(); }

  BondExpectations expectations(double temperature) const;
  TwoSiteRDM rdm(double temperature) const;

  /// Closed-form measure from the Gibbs bond expectations.
  double measure(double temperature) const;
  /// Measure evaluated on the thermal reduced density matrix.
  double oracle_measure(double temperature) const;

 private:
  const Spectrum* spectrum_;
  int i_;
  int j_;
  SpinKind spin_;
  Eigen::VectorXd spin_dot_;
  Eigen::VectorXd spin_dot_sq_;
  Eigen::VectorXd swap_;
  std::vector<Eigen::MatrixXd> pure_rdms_;
};

double thermal_concurrence(const ChainSpec& spec, int i, int j, double temperature);
double thermal_negativity(const ChainSpec& spec, int i, int j, double temperature);

enum class GridScale { Linear, Log };

GridScale parse_grid_scale(std::string_view text);
/// `steps` points from tmin to tmax inclusive.
std::vector<double> temperature_grid(double tmin, double tmax, int steps, GridScale scale);

struct ThermalCurve {
  ChainSpec spec;
  int site_i = 1;
  int site_j = 2;
  Measure measure = Measure::Concurrence;
  std::vector<double> temperatures;
  std::vector<double> values;
};

ThermalCurve thermal_scan(const ThermalBond& bond, std::span<const double> grid,
                          Execution exec = Execution::Parallel);
ThermalCurve thermal_scan(const ChainSpec& spec, int i, int j, std::span<const double> grid,
                          Measure measure, Execution exec = Execution::Parallel);

/// Which signed quantity was driven to zero to locate the threshold.
enum class RootTerm {
  NegatedSwap,     // -<swap>, the concurrence argument
  Quadratic,       // <(S·S)^2> - 2
  SwapComplement,  // 1 - <S·S> - <(S·S)^2>
};

std::string_view to_string(RootTerm term);

struct ThresholdResult {
  double temperature = 0.0;
  double bracket_width = 0.0;
  int iterations = 0;
  RootTerm root_term = RootTerm::NegatedSwap;
};

/// Lowest temperature above which the pair measure vanishes, bracketed by doubling from T = 0.1
/// and refined by bisection to a bracket no wider than `tol`.
ThresholdResult threshold_temperature(const ThermalBond& bond, double tol);
ThresholdResult threshold_temperature(const ChainSpec& spec, int i, int j, double tol);

}  // namespace hchain
