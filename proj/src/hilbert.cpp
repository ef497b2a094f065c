#include "hchain/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace hchain {

namespace {

// Keeps full-space vectors and per-sector dense blocks within desk-scale memory.
constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 16;

}  // namespace

std::string_view to_string(SpinKind spin) {
  return spin == SpinKind::Half ? "half" : "one";
}

SpinKind parse_spin_kind(std::string_view text) {
  if (text == "half" || text == "1/2") return SpinKind::Half;
  if (text == "one" || text == "1") return SpinKind::One;
  throw std::invalid_argument("unsupported spin kind '" + std::string(text) + "'");
}

std::uint64_t ChainSpec::dimension() const noexcept {
  std::uint64_t dim = 1;
  for (int i = 0; i < length; ++i) dim *= static_cast<std::uint64_t>(local_dim());
  return dim;
}

void ChainSpec::validate() const {
  if (spin != SpinKind::Half && spin != SpinKind::One)
    throw std::invalid_argument("unsupported spin kind");
  if (length < 2)
    throw std::invalid_argument("chain length must be at least 2, got " + std::to_string(length));
  if (!std::isfinite(coupling))
    throw std::invalid_argument("coupling must be finite");
  const double log_dim = length * std::log2(static_cast<double>(local_dim()));
  if (log_dim > std::log2(static_cast<double>(kMaxDimension)))
    throw std::invalid_argument("chain of length " + std::to_string(length) +
                                " exceeds the supported Hilbert-space dimension");
}

LocalSpinMatrices local_spin_matrices(SpinKind spin) {
  LocalSpinMatrices m;
  m.spin = spin == SpinKind::Half ? 0.5 : 1.0;
  const int d = spin == SpinKind::Half ? 2 : 3;
  const double s = m.spin;

  Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(d, d);
  m.sz = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const double mz = s - a;
    m.sz(a, a) = mz;
    // S+ |m⟩ = sqrt(s(s+1) - m(m+1)) |m+1⟩, and level a-1 carries m+1.
    if (a > 0) raise(a - 1, a) = std::sqrt(s * (s + 1) - mz * (mz + 1));
  }
  const Eigen::MatrixXcd lower = raise.adjoint();
  const std::complex<double> i{0.0, 1.0};
  m.sx = 0.5 * (raise + lower);
  m.sy = (raise - lower) / (2.0 * i);
  return m;
}

SectorBasis::SectorBasis(int twice_magnetization, std::vector<Config> configurations)
    : twice_m_(twice_magnetization), configs_(std::move(configurations)) {
  std::sort(configs_.begin(), configs_.end());
}

std::optional<std::size_t> SectorBasis::index_of(Config c) const {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), c);
  if (it == configs_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

std::vector<SectorBasis> enumerate_basis(const ChainSpec& spec) {
  spec.validate();
  const int d = spec.local_dim();
  const std::uint64_t dim = spec.dimension();

  std::map<int, std::vector<Config>> by_magnetization;
  for (Config c = 0; c < dim; ++c) {
    int twice_m = 0;
    Config rest = c;
    for (int site = 0; site < spec.length; ++site) {
      const int level = static_cast<int>(rest % d);
      rest /= d;
      twice_m += spec.twice_spin() - 2 * level;
    }
    by_magnetization[twice_m].push_back(c);
  }

  std::vector<SectorBasis> sectors;
  sectors.reserve(by_magnetization.size());
  for (auto& [twice_m, configs] : by_magnetization) sectors.emplace_back(twice_m, std::move(configs));
  return sectors;
}

HilbertSpace::HilbertSpace(const ChainSpec& spec)
    : spec_(spec), dimension_(spec.dimension()), sectors_(enumerate_basis(spec)) {
  place_.resize(spec_.length);
  Config p = 1;
  for (int site = 0; site < spec_.length; ++site) {
    place_[site] = p;
    p *= static_cast<Config>(spec_.local_dim());
  }
  sector_of_.assign(dimension_, 0);
  local_index_.assign(dimension_, 0);
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    const auto configs = sectors_[s].configurations();
    for (std::size_t k = 0; k < configs.size(); ++k) {
      sector_of_[configs[k]] = s;
      local_index_[configs[k]] = k;
    }
  }
}

Eigen::VectorXd HilbertSpace::embed(std::size_t s,
                                    const Eigen::Ref<const Eigen::VectorXd>& local) const {
  const auto configs = sector(s).configurations();
  if (static_cast<std::size_t>(local.size()) != configs.size())
    throw std::invalid_argument("sector vector has the wrong dimension");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension_));
  for (std::size_t k = 0; k < configs.size(); ++k) full[configs[k]] = local[k];
  return full;
}

Eigen::VectorXd HilbertSpace::restrict_to(std::size_t s,
                                          const Eigen::Ref<const Eigen::VectorXd>& full) const {
  if (static_cast<std::uint64_t>(full.size()) != dimension_)
    throw std::invalid_argument("state vector has the wrong dimension");
  const auto configs = sector(s).configurations();
  Eigen::VectorXd local(configs.size());
  for (std::size_t k = 0; k < configs.size(); ++k) local[k] = full[configs[k]];
  return local;
}

void HilbertSpace::check_pair(int i, int j) const {
  if (i < 1 || j > spec_.length || i >= j)
    throw std::invalid_argument("site pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") must satisfy 1 <= i < j <= " + std::to_string(spec_.length));
}

SpacePtr make_space(const ChainSpec& spec) { return std::make_shared<const HilbertSpace>(spec); }

Config parse_configuration(std::string_view ket, int local_dim) {
  Config c = 0;
  Config place = 1;
  for (char ch : ket) {
    const int level = ch - '0';
    if (level < 0 || level >= local_dim)
      throw std::invalid_argument("invalid local level '" + std::string(1, ch) + "' in ket");
    c += static_cast<Config>(level) * place;
    place *= static_cast<Config>(local_dim);
  }
  return c;
}

}  // namespace hchain
