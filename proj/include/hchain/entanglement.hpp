#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hchain/observables.hpp"
#include "hchain/spectra.hpp"

namespace hchain {

enum class Measure { Concurrence, Negativity };

std::string_view to_string(Measure measure);
Measure parse_measure(std::string_view text);
/// Concurrence for spin-1/2 chains, negativity for spin-1 chains.
Measure natural_measure(SpinKind spin);
/// Throws std::invalid_argument when the measure does not apply to the spin kind.
void check_measure(SpinKind spin, Measure measure);

/// C = max{0, -<swap>} = max{0, -2<S_i·S_j> - 1/2}. Valid for SU(2)-invariant qubit pairs.
double concurrence_su2(const BondExpectations& be);

/// N = 1/2 max[0, <swap> - <S_i·S_j> - 1] + 1/3 max[0, -<swap>]. Valid for SU(2)-invariant
/// spin-1 pairs.
double negativity_su2(const BondExpectations& be);

/// The two signed arguments of the spin-1 negativity: h2 - 2 and 1 - h1 - h2.
struct NegativityArguments {
  double quadratic;
  double swap_complement;
};
NegativityArguments negativity_arguments(const BondExpectations& be);

/// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const TwoSiteRDM& rdm);

/// Sum of |negative eigenvalues| of the partial transpose over the second site.
double pt_negativity(const TwoSiteRDM& rdm);

/// Measure from the closed form and from the reduced density matrix oracle.
struct PairEntanglement {
  double closed_form;
  double oracle;
};

PairEntanglement pair_entanglement(const QuantumState& state, const SpacePtr& space, int i, int j,
                                   Measure measure);

/// Nearest-neighbour entanglement along the chain; entry b is bond (b+1, b+2).
struct EntanglementProfile {
  ChainSpec spec;
  std::size_t level = 0;
  Measure measure = Measure::Concurrence;
  std::vector<double> values;
  std::vector<double> oracle;
};

EntanglementProfile bond_profile(std::span<const EnergyLevel> levels, const SpacePtr& space,
                                 std::size_t k, Measure measure);
/// Builds and diagonalizes the chain first.
EntanglementProfile bond_profile(const ChainSpec& spec, std::size_t k, Measure measure,
                                 double degeneracy_tol = kDefaultDegeneracyTol);

/// Sign agreement of consecutive differences of two profiles. Differences with magnitude at or
/// below `flat_tol` count toward neither tally.
struct PhaseComparison {
  int same = 0;
  int opposite = 0;
  int total = 0;

  bool out_of_phase(double quorum = 2.0 / 3.0) const { return total > 0 && opposite >= quorum * total; }
  bool in_phase(double quorum = 2.0 / 3.0) const { return total > 0 && same >= quorum * total; }
};

PhaseComparison compare_phases(std::span<const double> a, std::span<const double> b,
                               double flat_tol = 1e-12);

}  // namespace hchain
