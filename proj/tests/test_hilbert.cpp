#include <doctest.h>

#include <complex>
#include <set>

#include "hchain/hilbert.hpp"

using namespace hchain;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("enumerate_basis sector sizes") {
  SUBCASE("two qubits") {
    const auto sectors = enumerate_basis({2, SpinKind::Half});
    REQUIRE(sectors.size() == 3);
    CHECK(sectors[0].magnetization() == -1.0);
    CHECK(sectors[1].magnetization() == 0.0);
    CHECK(sectors[2].magnetization() == 1.0);
    CHECK(sectors[0].size() == 1);
    CHECK(sectors[1].size() == 2);
    CHECK(sectors[2].size() == 1);
  }
  SUBCASE("three spin-1 sites") {
    const auto sectors = enumerate_basis({3, SpinKind::One});
    REQUIRE(sectors.size() == 7);
    CHECK(sectors.front().magnetization() == -3.0);
    CHECK(sectors.back().magnetization() == 3.0);
    CHECK(sectors[3].magnetization() == 0.0);
    CHECK(sectors[3].size() == 7);
  }
  SUBCASE("ten qubits follow binomial counting") {
    const auto sectors = enumerate_basis({10, SpinKind::Half});
    REQUIRE(sectors.size() == 11);
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < sectors.size(); ++s) {
      // Ascending m means the number of up spins grows with s.
      CHECK(sectors[s].size() == binomial(10, static_cast<int>(s)));
      total += sectors[s].size();
    }
    CHECK(total == 1024);
  }
}

TEST_CASE("sectors partition the configuration space") {
  for (const ChainSpec spec : {ChainSpec{6, SpinKind::Half}, ChainSpec{4, SpinKind::One}, ChainSpec{5, SpinKind::One}}) {
    const HilbertSpace space(spec);
    std::set<Config> seen;
    int previous_m = -1000;
    for (std::size_t s = 0; s < space.num_sectors(); ++s) {
      const auto& sector = space.sector(s);
      CHECK(sector.twice_magnetization() > previous_m);
      previous_m = sector.twice_magnetization();
      for (std::size_t k = 0; k < sector.size(); ++k) {
        const Config c = sector.configuration(k);
        CHECK(seen.insert(c).second);
        int twice_m = 0;
        for (int site = 1; site <= spec.length; ++site) twice_m += space.twice_sz(space.digit(c, site));
        CHECK(twice_m == sector.twice_magnetization());
        CHECK(sector.index_of(c) == k);
        CHECK(space.sector_of(c) == s);
        CHECK(space.local_index(c) == k);
      }
    }
    CHECK(seen.size() == spec.dimension());
  }
}

TEST_CASE("index_of rejects foreign configurations") {
  const HilbertSpace space({4, SpinKind::Half});
  const auto& sector = space.sector(0);
  CHECK(sector.index_of(15) == 0);  // all spins down
  CHECK_FALSE(sector.index_of(0).has_value());
}

TEST_CASE("digit helpers treat site 1 as least significant") {
  const HilbertSpace space({3, SpinKind::One});
  const Config c = parse_configuration("012", 3);
  CHECK(c == 0 + 1 * 3 + 2 * 9);
  CHECK(space.digit(c, 1) == 0);
  CHECK(space.digit(c, 2) == 1);
  CHECK(space.digit(c, 3) == 2);
  CHECK(space.with_digit(c, 3, 0) == 3);
  CHECK(space.with_digit(c, 1, 2) == c + 2);
  CHECK_THROWS_AS(parse_configuration("013", 3), std::invalid_argument);
}

TEST_CASE("embed and restrict are inverse on a sector") {
  const HilbertSpace space({5, SpinKind::Half});
  const std::size_t s = 2;
  Eigen::VectorXd local = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(space.sector(s).size()), 1.0, 2.0);
  const Eigen::VectorXd full = space.embed(s, local);
  CHECK(full.size() == 32);
  CHECK((space.restrict_to(s, full) - local).norm() == 0.0);
  CHECK(full.sum() == doctest::Approx(local.sum()));
}

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(enumerate_basis({1, SpinKind::Half}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis({0, SpinKind::One}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_basis({40, SpinKind::Half}), std::invalid_argument);
  CHECK_THROWS_AS((ChainSpec{3, static_cast<SpinKind>(7)}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(parse_spin_kind("three-halves"), std::invalid_argument);
  CHECK(parse_spin_kind("half") == SpinKind::Half);
  CHECK(parse_spin_kind("one") == SpinKind::One);
  const HilbertSpace space({4, SpinKind::Half});
  CHECK_THROWS_AS(space.check_pair(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(space.check_pair(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(space.check_pair(3, 5), std::invalid_argument);
  CHECK_NOTHROW(space.check_pair(1, 4));
}

TEST_CASE("local spin matrices satisfy the su(2) algebra") {
  const std::complex<double> i{0.0, 1.0};
  for (SpinKind kind : {SpinKind::Half, SpinKind::One}) {
    const LocalSpinMatrices m = local_spin_matrices(kind);
    const double s = m.spin;
    const auto d = m.sz.rows();
    CHECK(d == (kind == SpinKind::Half ? 2 : 3));
    CHECK((m.sx * m.sy - m.sy * m.sx - i * m.sz).norm() < 1e-14);
    CHECK((m.sy * m.sz - m.sz * m.sy - i * m.sx).norm() < 1e-14);
    CHECK((m.sz * m.sx - m.sx * m.sz - i * m.sy).norm() < 1e-14);
    const Eigen::MatrixXcd casimir = m.sx * m.sx + m.sy * m.sy + m.sz * m.sz;
    CHECK((casimir - s * (s + 1) * Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-14);
    for (const auto* op : {&m.sx, &m.sy, &m.sz}) CHECK((*op - op->adjoint()).norm() < 1e-14);
  }
  const LocalSpinMatrices half = local_spin_matrices(SpinKind::Half);
  CHECK(half.sz(0, 0).real() == 0.5);
  CHECK(half.sz(1, 1).real() == -0.5);
  const LocalSpinMatrices one = local_spin_matrices(SpinKind::One);
  CHECK(one.sz(0, 0).real() == 1.0);
  CHECK(one.sz(1, 1).real() == 0.0);
  CHECK(one.sz(2, 2).real() == -1.0);
}
