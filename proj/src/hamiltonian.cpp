#include "hchain/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hchain {

namespace {

using Triplet = Eigen::Triplet<double>;

// Builds a sector-blocked operator from a per-configuration emitter. `emit(c, add)` must call
// add(target, value) for every nonzero <target|O|c>.
template <class Emitter>
BlockOperator assemble(const SpacePtr& space, Emitter&& emit) {
  std::vector<BlockOperator::Block> blocks;
  blocks.reserve(space->num_sectors());
  for (std::size_t s = 0; s < space->num_sectors(); ++s) {
    const auto configs = space->sector(s).configurations();
    std::vector<Triplet> triplets;
    for (std::size_t k = 0; k < configs.size(); ++k) {
      emit(configs[k], [&](Config target, double value) {
        if (space->sector_of(target) != s)
          throw std::logic_error("operator couples distinct magnetization sectors");
        triplets.emplace_back(static_cast<int>(space->local_index(target)), static_cast<int>(k),
                              value);
      });
    }
    const auto n = static_cast<Eigen::Index>(configs.size());
    BlockOperator::Block block(n, n);
    block.setFromTriplets(triplets.begin(), triplets.end());
    block.prune(0.0);
    blocks.push_back(std::move(block));
  }
  return BlockOperator(space, std::move(blocks));
}

// Emits scale * S_i·S_j |c⟩ using S_i·S_j = S^z_i S^z_j + (S^+_i S^-_j + S^-_i S^+_j) / 2.
template <class Add>
void emit_spin_dot(const HilbertSpace& space, Config c, int i, int j, double scale, Add&& add) {
  const int d = space.local_dim();
  const double s = 0.5 * space.spec().twice_spin();
  const double casimir = s * (s + 1.0);
  const int a = space.digit(c, i);
  const int b = space.digit(c, j);
  const double ma = 0.5 * space.twice_sz(a);
  const double mb = 0.5 * space.twice_sz(b);

  add(c, scale * ma * mb);
  // Raising m moves a local level from k to k-1.
  if (a > 0 && b < d - 1) {
    const double amp = std::sqrt(casimir - ma * (ma + 1.0)) * std::sqrt(casimir - mb * (mb - 1.0));
    add(space.with_digit(space.with_digit(c, i, a - 1), j, b + 1), 0.5 * scale * amp);
  }
  if (a < d - 1 && b > 0) {
    const double amp = std::sqrt(casimir - ma * (ma - 1.0)) * std::sqrt(casimir - mb * (mb + 1.0));
    add(space.with_digit(space.with_digit(c, i, a + 1), j, b - 1), 0.5 * scale * amp);
  }
}

void check_compatible(const BlockOperator& a, const BlockOperator& b) {
  if (a.space_ptr() != b.space_ptr() && !(a.space().spec() == b.space().spec()))
    throw std::invalid_argument("operators act on different chains");
}

}  // namespace

BlockOperator::BlockOperator(SpacePtr space, std::vector<Block> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  if (!space_) throw std::invalid_argument("operator requires a Hilbert space");
  if (blocks_.size() != space_->num_sectors())
    throw std::invalid_argument("one block per magnetization sector is required");
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    const auto n = static_cast<Eigen::Index>(space_->sector(s).size());
    if (blocks_[s].rows() != n || blocks_[s].cols() != n)
      throw std::invalid_argument("block dimension does not match its sector");
  }
}

Eigen::VectorXd BlockOperator::apply(const Eigen::Ref<const Eigen::VectorXd>& full) const {
  if (static_cast<std::uint64_t>(full.size()) != space_->dimension())
    throw std::invalid_argument("vector dimension does not match the operator");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(full.size());
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    const auto configs = space_->sector(s).configurations();
    Eigen::VectorXd local = space_->restrict_to(s, full);
    if (local.isZero(0.0)) continue;
    const Eigen::VectorXd image = blocks_[s] * local;
    for (std::size_t k = 0; k < configs.size(); ++k) out[configs[k]] = image[k];
  }
  return out;
}

Eigen::MatrixXd BlockOperator::to_dense() const {
  const auto dim = static_cast<Eigen::Index>(space_->dimension());
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    const auto configs = space_->sector(s).configurations();
    for (int col = 0; col < blocks_[s].outerSize(); ++col)
      for (Block::InnerIterator it(blocks_[s], col); it; ++it)
        dense(configs[it.row()], configs[it.col()]) = it.value();
  }
  return dense;
}

double BlockOperator::max_asymmetry() const {
  double worst = 0.0;
  for (const auto& b : blocks_) {
    const Block diff = b - Block(b.transpose());
    for (int col = 0; col < diff.outerSize(); ++col)
      for (Block::InnerIterator it(diff, col); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& other) {
  check_compatible(*this, other);
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += other.blocks_[s];
  return *this;
}

BlockOperator& BlockOperator::operator*=(double factor) {
  for (auto& b : blocks_) b *= factor;
  return *this;
}

BlockOperator operator+(BlockOperator lhs, const BlockOperator& rhs) {
  lhs += rhs;
  return lhs;
}

BlockOperator operator*(double factor, BlockOperator op) {
  op *= factor;
  return op;
}

BlockOperator identity_operator(const SpacePtr& space) {
  return assemble(space, [](Config c, auto&& add) { add(c, 1.0); });
}

BlockOperator spin_dot_operator(const SpacePtr& space, int i, int j) {
  space->check_pair(i, j);
  return assemble(space, [&](Config c, auto&& add) { emit_spin_dot(*space, c, i, j, 1.0, add); });
}

BlockOperator swap_operator(const SpacePtr& space, int i, int j) {
  space->check_pair(i, j);
  return assemble(space, [&](Config c, auto&& add) {
    const int a = space->digit(c, i);
    const int b = space->digit(c, j);
    add(space->with_digit(space->with_digit(c, i, b), j, a), 1.0);
  });
}

BlockOperator build_hamiltonian(const SpacePtr& space) {
  const ChainSpec& spec = space->spec();
  const double J = spec.coupling;
  const bool half = spec.spin == SpinKind::Half;
  return assemble(space, [&](Config c, auto&& add) {
    for (int i = 1; i < spec.length; ++i) {
      if (half) {
        emit_spin_dot(*space, c, i, i + 1, 2.0 * J, add);
        add(c, 0.5 * J);
      } else {
        emit_spin_dot(*space, c, i, i + 1, J, add);
      }
    }
  });
}

BondOperators bond_operators(const SpacePtr& space, int i, int j) {
  BlockOperator h1 = spin_dot_operator(space, i, j);
  std::vector<BlockOperator::Block> squared;
  squared.reserve(h1.num_blocks());
  for (std::size_t s = 0; s < h1.num_blocks(); ++s) {
    BlockOperator::Block sq = h1.block(s) * h1.block(s);
    sq.prune(0.0);
    squared.push_back(std::move(sq));
  }
  BlockOperator h2(space, std::move(squared));
  return {std::move(h1), std::move(h2), swap_operator(space, i, j)};
}

}  // namespace hchain
