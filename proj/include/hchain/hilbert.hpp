#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hchain {

enum class SpinKind { Half, One };

std::string_view to_string(SpinKind spin);
SpinKind parse_spin_kind(std::string_view text);

/// A product configuration encoded in base d; site 1 is the least-significant digit.
using Config = std::uint64_t;

/// Open-boundary Heisenberg chain. Sites are numbered 1..length.
struct ChainSpec {
  int length = 2;
  SpinKind spin = SpinKind::Half;
  double coupling = 1.0;

  int local_dim() const noexcept { return spin == SpinKind::Half ? 2 : 3; }
  /// 2s, so that every magnetization is an integer in these units.
  int twice_spin() const noexcept { return spin == SpinKind::Half ? 1 : 2; }
  std::uint64_t dimension() const noexcept;

  /// Throws std::invalid_argument on a malformed chain.
  void validate() const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Spin operators for a single site in the |s, m = s⟩, |s, s-1⟩, ... basis.
struct LocalSpinMatrices {
  double spin = 0.5;
  Eigen::MatrixXcd sx;
  Eigen::MatrixXcd sy;
  Eigen::MatrixXcd sz;
};

LocalSpinMatrices local_spin_matrices(SpinKind spin);

/// Configurations sharing one total magnetization, kept in ascending encoded order.
class SectorBasis {
 public:
  SectorBasis(int twice_magnetization, std::vector<Config> configurations);

  int twice_magnetization() const noexcept { return twice_m_; }
  double magnetization() const noexcept { return 0.5 * twice_m_; }
  std::size_t size() const noexcept { return configs_.size(); }
  std::span<const Config> configurations() const noexcept { return configs_; }
  Config configuration(std::size_t k) const { return configs_.at(k); }
  std::optional<std::size_t> index_of(Config c) const;

 private:
  int twice_m_;
  std::vector<Config> configs_;
};

/// Sectors of a chain ordered by ascending magnetization.
std::vector<SectorBasis> enumerate_basis(const ChainSpec& spec);

/// The full chain Hilbert space with O(1) configuration lookup.
class HilbertSpace {
 public:
  explicit HilbertSpace(const ChainSpec& spec);

  const ChainSpec& spec() const noexcept { return spec_; }
  int length() const noexcept { return spec_.length; }
  int local_dim() const noexcept { return spec_.local_dim(); }
  std::uint64_t dimension() const noexcept { return dimension_; }

  std::span<const SectorBasis> sectors() const noexcept { return sectors_; }
  const SectorBasis& sector(std::size_t s) const { return sectors_.at(s); }
  std::size_t num_sectors() const noexcept { return sectors_.size(); }

  std::size_t sector_of(Config c) const { return sector_of_[c]; }
  std::size_t local_index(Config c) const { return local_index_[c]; }

  /// Local level (0..d-1) of 1-based `site`.
  int digit(Config c, int site) const noexcept {
    return static_cast<int>((c / place_[site - 1]) % spec_.local_dim());
  }
  Config place_value(int site) const noexcept { return place_[site - 1]; }
  Config with_digit(Config c, int site, int level) const noexcept {
    const Config place = place_[site - 1];
    return c - static_cast<Config>(digit(c, site)) * place + static_cast<Config>(level) * place;
  }
  /// Twice the S^z eigenvalue of a local level.
  int twice_sz(int level) const noexcept { return spec_.twice_spin() - 2 * level; }

  /// Scatter a sector-local vector into the full configuration basis.
  Eigen::VectorXd embed(std::size_t s, const Eigen::Ref<const Eigen::VectorXd>& local) const;
  /// Gather the sector-local components of a full vector.
  Eigen::VectorXd restrict_to(std::size_t s, const Eigen::Ref<const Eigen::VectorXd>& full) const;

  /// Throws std::invalid_argument unless 1 <= i < j <= length.
  void check_pair(int i, int j) const;

 private:
  ChainSpec spec_;
  std::uint64_t dimension_;
  std::vector<Config> place_;
  std::vector<SectorBasis> sectors_;
  std::vector<std::size_t> sector_of_;
  std::vector<std::size_t> local_index_;
};

using SpacePtr = std::shared_ptr<const HilbertSpace>;

SpacePtr make_space(const ChainSpec& spec);

/// Parse a ket label such as "0121", written site 1 first, into an encoded configuration.
Config parse_configuration(std::string_view ket, int local_dim);

}  // namespace hchain
