#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cli/table.hpp"
#include "hchain/entanglement.hpp"
#include "hchain/thermal.hpp"

namespace hchain::cli {

/// Flag-level mistakes (bad values, incompatible combinations). Maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  ChainSpec chain{2, SpinKind::Half, 1.0};
  int bond_i = 1;
  int bond_j = 2;
  std::string level = "ground";
  std::optional<Measure> measure;  // defaults to the spin kind's measure
  double tmin = 0.05;
  double tmax = 3.0;
  int steps = 60;
  GridScale tscale = GridScale::Linear;
  double degeneracy_tol = kDefaultDegeneracyTol;
  double threshold_tol = 1e-7;
  int figure_id = 1;
  std::string out;  // empty: standard output (directory for `figure`)
  std::string format = "csv";
  int threads = 0;

  /// Throws UsageError.
  void validate() const;
  Measure resolved_measure() const { return measure.value_or(natural_measure(chain.spin)); }
  std::size_t level_index() const;
};

Table spectrum_table(const RunConfig& config);
Table profile_table(const RunConfig& config);
Table thermal_table(const RunConfig& config);
Table threshold_table(const RunConfig& config);

/// Long-format figure data: figure_id, L, level_or_T, bond_or_measure, value.
Table figure_table(int figure_id, const RunConfig& config);

/// Parses arguments and runs one subcommand. Exit codes: 0 success, 1 computational failure,
/// 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hchain::cli
