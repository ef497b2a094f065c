#include "cli/commands.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <vector>

#include <CLI11.hpp>

#include "hchain/errors.hpp"
#include "hchain/parallel.hpp"

namespace hchain::cli {

namespace {

struct Chain {
  SpacePtr space;
  Spectrum spectrum;
};

Chain solve(const ChainSpec& spec) {
  SpacePtr space = make_space(spec);
  Spectrum spectrum = diagonalize(build_hamiltonian(space));
  return {std::move(space), std::move(spectrum)};
}

std::vector<double> grid_of(const RunConfig& config) {
  return temperature_grid(config.tmin, config.tmax, config.steps, config.tscale);
}

Table profile_rows(int figure_id, SpinKind spin, int lmin, int lmax, const RunConfig& config) {
  Table table{{"figure_id", "L", "level_or_T", "bond_or_measure", "value"}, {}};
  for (int length = lmin; length <= lmax; ++length) {
    ChainSpec spec{length, spin, config.chain.coupling};
    const Chain chain = solve(spec);
    const auto levels = group_levels(chain.spectrum, config.degeneracy_tol);
    for (const auto& [k, label] : {std::pair<std::size_t, const char*>{0, "ground"}, {1, "first"}}) {
      const EntanglementProfile p = bond_profile(levels, chain.space, k, natural_measure(spin));
      for (std::size_t b = 0; b < p.values.size(); ++b)
        table.add_row({std::int64_t{figure_id}, std::int64_t{length}, std::string(label),
                       static_cast<std::int64_t>(b + 1), p.values[b]});
    }
  }
  return table;
}

Table thermal_rows(int figure_id, SpinKind spin, const RunConfig& config) {
  Table table{{"figure_id", "L", "level_or_T", "bond_or_measure", "value"}, {}};
  const std::vector<double> grid = grid_of(config);
  const Measure measure = natural_measure(spin);
  for (int length = 2; length <= 6; ++length) {
    ChainSpec spec{length, spin, config.chain.coupling};
    const Chain chain = solve(spec);
    const ThermalBond bond(chain.spectrum, 1, 2);
    const ThermalCurve curve = thermal_scan(bond, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
      table.add_row({std::int64_t{figure_id}, std::int64_t{length}, curve.temperatures[k],
                     std::string(to_string(measure)), curve.values[k]});
  }
  return table;
}

void emit(const Table& table, const RunConfig& config, std::ostream& out) {
  const std::string text = config.format == "json" ? table.to_json() : table.to_csv();
  if (config.out.empty())
    out << text;
  else
    write_atomically(config.out, text);
}

}  // namespace

void RunConfig::validate() const {
  try {
    chain.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (measure && *measure != natural_measure(chain.spin))
    throw UsageError(std::string(to_string(*measure)) + " cannot be used with spin-" +
                     std::string(to_string(chain.spin)) + " chains");
  if (bond_i < 1 || bond_j > chain.length || bond_i >= bond_j)
    throw UsageError("--bond I J requires 1 <= I < J <= length");
  if (!(tmin > 0.0) || !(tmax > 0.0)) throw UsageError("temperatures must be positive");
  if (steps < 1) throw UsageError("--steps must be at least 1");
  if (steps > 1 && !(tmax > tmin)) throw UsageError("--tmax must exceed --tmin");
  if (!(degeneracy_tol > 0.0)) throw UsageError("--degeneracy-tol must be positive");
  if (!(threshold_tol > 0.0)) throw UsageError("--tol must be positive");
  if (figure_id < 1 || figure_id > 4) throw UsageError("--id must be 1, 2, 3 or 4");
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  level_index();
}

std::size_t RunConfig::level_index() const {
  if (level == "ground") return 0;
  if (level == "first") return 1;
  std::size_t pos = 0;
  long k = -1;
  try {
    k = std::stol(level, &pos);
  } catch (const std::exception&) {
  }
  if (k < 0 || pos != level.size()) throw UsageError("--level must be ground, first or a nonnegative index");
  return static_cast<std::size_t>(k);
}

Table spectrum_table(const RunConfig& config) {
  const Chain chain = solve(config.chain);
  Table table{{"index", "energy", "degeneracy"}, {}};
  for (const auto& level : group_levels(chain.spectrum, config.degeneracy_tol))
    table.add_row({static_cast<std::int64_t>(level.index), level.energy,
                   static_cast<std::int64_t>(level.degeneracy)});
  return table;
}

Table profile_table(const RunConfig& config) {
  const Chain chain = solve(config.chain);
  const auto levels = group_levels(chain.spectrum, config.degeneracy_tol);
  const std::size_t k = config.level_index();
  if (k >= levels.size())
    throw UsageError("--level " + config.level + " exceeds the " + std::to_string(levels.size()) + " levels");
  const EntanglementProfile p = bond_profile(levels, chain.space, k, config.resolved_measure());
  Table table{{"bond", "closed_form", "oracle"}, {}};
  for (std::size_t b = 0; b < p.values.size(); ++b)
    table.add_row({static_cast<std::int64_t>(b + 1), p.values[b], p.oracle[b]});
  return table;
}

Table thermal_table(const RunConfig& config) {
  const Chain chain = solve(config.chain);
  const ThermalBond bond(chain.spectrum, config.bond_i, config.bond_j);
  const ThermalCurve curve = thermal_scan(bond, grid_of(config));
  Table table{{"temperature", "value"}, {}};
  for (std::size_t k = 0; k < curve.values.size(); ++k) table.add_row({curve.temperatures[k], curve.values[k]});
  return table;
}

Table threshold_table(const RunConfig& config) {
  const Chain chain = solve(config.chain);
  const ThermalBond bond(chain.spectrum, config.bond_i, config.bond_j);
  const ThresholdResult r = threshold_temperature(bond, config.threshold_tol);
  Table table{{"temperature", "bracket_width", "iterations", "root_term"}, {}};
  table.add_row({r.temperature, r.bracket_width, std::int64_t{r.iterations}, std::string(to_string(r.root_term))});
  return table;
}

Table figure_table(int figure_id, const RunConfig& config) {
  switch (figure_id) {
    case 1: return profile_rows(1, SpinKind::Half, 3, 10, config);
    case 2: return thermal_rows(2, SpinKind::Half, config);
    case 3: return profile_rows(3, SpinKind::One, 3, 6, config);
    case 4: return thermal_rows(4, SpinKind::One, config);
    default: throw UsageError("--id must be 1, 2, 3 or 4");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact diagonalization of open Heisenberg chains: spectra and pairwise entanglement"};
  app.require_subcommand(1);

  std::string spin = "half";
  std::string measure;
  std::string tscale = "lin";
  std::vector<int> bond;

  auto add_chain = [&](CLI::App* sub) {
    sub->add_option("--spin", spin, "half or one")->check(CLI::IsMember({"half", "one"}));
    sub->add_option("--length", config.chain.length, "number of sites")->required();
    sub->add_option("--coupling", config.chain.coupling, "exchange constant J");
    sub->add_option("--degeneracy-tol", config.degeneracy_tol, "relative level-merging tolerance");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "output path (default: standard output)");
    sub->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", config.threads, "cap on worker threads");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--tmin", config.tmin, "lowest temperature");
    sub->add_option("--tmax", config.tmax, "highest temperature");
    sub->add_option("--steps", config.steps, "number of grid points");
    sub->add_option("--tscale", tscale, "lin or log")->check(CLI::IsMember({"lin", "log"}));
  };
  auto add_bond = [&](CLI::App* sub) {
    sub->add_option("--bond", bond, "site pair I J (1-based)")->expected(2);
    sub->add_option("--measure", measure, "concurrence or negativity")
        ->check(CLI::IsMember({"concurrence", "negativity"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "distinct energy levels with degeneracies");
  add_chain(spectrum);
  add_output(spectrum);

  auto* profile = app.add_subcommand("profile", "nearest-neighbour entanglement of one level");
  add_chain(profile);
  add_output(profile);
  profile->add_option("--level", config.level, "ground, first or a level index");
  profile->add_option("--measure", measure, "concurrence or negativity")
      ->check(CLI::IsMember({"concurrence", "negativity"}));

  auto* thermal = app.add_subcommand("thermal", "thermal entanglement of one pair over a temperature grid");
  add_chain(thermal);
  add_output(thermal);
  add_grid(thermal);
  add_bond(thermal);

  auto* threshold = app.add_subcommand("threshold", "temperature above which the pair is separable");
  add_chain(threshold);
  add_output(threshold);
  add_bond(threshold);
  threshold->add_option("--tol", config.threshold_tol, "bisection bracket width");

  auto* figure = app.add_subcommand("figure", "long-format data behind figures 1-4");
  figure->add_option("--id", config.figure_id, "figure number 1..4")->required();
  add_output(figure);
  add_grid(figure);
  figure->add_option("--coupling", config.chain.coupling, "exchange constant J");
  figure->add_option("--degeneracy-tol", config.degeneracy_tol, "relative level-merging tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    config.subcommand = app.get_subcommands().front()->get_name();
    config.chain.spin = parse_spin_kind(spin);
    config.tscale = parse_grid_scale(tscale);
    if (!measure.empty()) config.measure = parse_measure(measure);
    if (!bond.empty()) {
      config.bond_i = bond[0];
      config.bond_j = bond[1];
    }
    if (config.subcommand == "figure") config.chain.length = 2;
    config.validate();
    set_thread_limit(config.threads);

    if (config.subcommand == "spectrum") {
      emit(spectrum_table(config), config, out);
    } else if (config.subcommand == "profile") {
      emit(profile_table(config), config, out);
    } else if (config.subcommand == "thermal") {
      emit(thermal_table(config), config, out);
    } else if (config.subcommand == "threshold") {
      emit(threshold_table(config), config, out);
    } else {
      const std::filesystem::path dir = config.out.empty() ? std::filesystem::path(".") : std::filesystem::path(config.out);
      std::filesystem::create_directories(dir);
      const Table table = figure_table(config.figure_id, config);
      RunConfig file_config = config;
      file_config.out = (dir / ("fig" + std::to_string(config.figure_id) + "." + config.format)).string();
      emit(table, file_config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace hchain::cli
