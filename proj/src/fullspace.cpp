#include "uqd/fullspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "uqd/errors.hpp"

namespace uqd {

namespace {

// Bit of position p (1-based, position 1 most significant).
unsigned position_bit(int n, int p) { return 1u << (2 * n + 1 - p); }

unsigned position_mask(int n, const std::vector<int>& positions) {
  unsigned mask = 0;
  for (int p : positions) {
    if (p < 1 || p > 2 * n + 1) throw UsageError("position " + std::to_string(p) + " out of range");
    const unsigned bit = position_bit(n, p);
    if (mask & bit) throw UsageError("duplicate position " + std::to_string(p));
    mask |= bit;
  }
  return mask;
}

// All subsets of `mask` with exactly k bits set.
std::vector<unsigned> patterns(unsigned mask, int k) {
  std::vector<unsigned> out;
  for (unsigned sub = mask;; sub = (sub - 1) & mask) {
    if (std::popcount(sub) == k) out.push_back(sub);
    if (sub == 0) break;
  }
  return out;
}

}  // namespace

void require_full_space(int n) {
  require_copy_count(n);
  if (n > kFullSpaceMax) {
    throw ResourceError("full-space oracle limited to n <= " + std::to_string(kFullSpaceMax) +
                        ", got " + std::to_string(n));
  }
}

std::vector<int> odd_positions(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(2 * i + 1);
  return out;
}

std::vector<int> even_positions(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(2 * i + 2);
  return out;
}

std::vector<int> block_positions(int n, SymmetricBlock block) {
  std::vector<int> out = block == SymmetricBlock::EvenTail ? even_positions(n) : odd_positions(n);
  out.push_back(tail_position(n));
  return out;
}

FullState tensor_input(const BlochQubit& psi1, const BlochQubit& psi2, int n, Hypothesis which) {
  require_full_space(n);
  const Eigen::Vector2cd a = psi1.amplitudes();
  const Eigen::Vector2cd b = psi2.amplitudes();
  const Eigen::Vector2cd tail = which == Hypothesis::First ? a : b;

  Eigen::VectorXcd state = Eigen::VectorXcd::Ones(1);
  for (int p = 1; p <= 2 * n + 1; ++p) {
    const Eigen::Vector2cd& q = p == 2 * n + 1 ? tail : (p % 2 == 1 ? a : b);
    Eigen::VectorXcd next(2 * state.size());
    for (Eigen::Index i = 0; i < state.size(); ++i) {
      next(2 * i) = state(i) * q(0);
      next(2 * i + 1) = state(i) * q(1);
    }
    state = std::move(next);
  }
  return {n, std::move(state)};
}

FullOperator symmetric_projector_full(int n, const std::vector<int>& positions) {
  require_full_space(n);
  if (static_cast<int>(positions.size()) != n + 1) {
    throw UsageError("symmetric projector needs exactly n+1 positions");
  }
  const unsigned mask = position_mask(n, positions);
  const int d = full_dimension(n);

  std::vector<std::vector<unsigned>> by_weight;
  for (int k = 0; k <= n + 1; ++k) by_weight.push_back(patterns(mask, k));

  FullOperator p = FullOperator::Zero(d, d);
  for (unsigned x = 0; x < static_cast<unsigned>(d); ++x) {
    const unsigned rest = x & ~mask;
    const int k = std::popcount(x & mask);
    const double w = 1.0 / static_cast<double>(binomial(n + 1, k));
    for (unsigned sub : by_weight[k]) p(x, rest | sub) = w;
  }
  return p;
}

FullOperator povm_element_full(int n, const PovmParams& params, Hypothesis which) {
  const FullOperator p = symmetric_projector_full(n, block_positions(n, detecting_block(which)));
  const int d = full_dimension(n);
  return params.c(which) * (FullOperator::Identity(d, d) - p);
}

double expectation(const FullOperator& op, const FullState& state) {
  if (op.rows() != state.amplitudes.size()) throw UsageError("operator/state dimension mismatch");
  return state.amplitudes.dot(op * state.amplitudes).real();
}

Eigen::VectorXcd dicke_state_full(int n, const std::vector<int>& positions, int k) {
  require_full_space(n);
  const unsigned mask = position_mask(n, positions);
  const int size = static_cast<int>(positions.size());
  if (k < 0 || k > size) throw DomainError("Dicke excitation out of range");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(full_dimension(n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(size, k)));
  for (unsigned sub : patterns(mask, k)) out(sub) = amp;
  return out;
}

Eigen::MatrixXcd reduced_basis_image(int n) {
  require_full_space(n);
  const unsigned odd = position_mask(n, odd_positions(n));
  const unsigned even = position_mask(n, even_positions(n));
  const unsigned tail = position_bit(n, tail_position(n));

  Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(full_dimension(n), reduced_dimension(n));
  for (int l = 0; l <= n; ++l) {
    const auto odd_patterns = patterns(odd, l);
    for (int m = 0; m <= n; ++m) {
      const auto even_patterns = patterns(even, m);
      const double amp =
          1.0 / std::sqrt(static_cast<double>(binomial(n, l)) * static_cast<double>(binomial(n, m)));
      for (int t = 0; t < 2; ++t) {
        const int col = flat_index(n, {l, m, t});
        for (unsigned po : odd_patterns) {
          for (unsigned pe : even_patterns) image(po | pe | (t ? tail : 0u), col) = amp;
        }
      }
    }
  }
  return image;
}

Eigen::VectorXcd project_to_reduced(const FullState& state) {
  return reduced_basis_image(state.n).adjoint() * state.amplitudes;
}

FullState apply_transposition(const FullState& state, int a, int b) {
  const int n = state.n;
  position_mask(n, {a, b});
  const unsigned ba = position_bit(n, a);
  const unsigned bb = position_bit(n, b);
  FullState out{n, Eigen::VectorXcd(state.amplitudes.size())};
  for (unsigned x = 0; x < static_cast<unsigned>(state.amplitudes.size()); ++x) {
    unsigned y = x & ~(ba | bb);
    if (x & ba) y |= bb;
    if (x & bb) y |= ba;
    out.amplitudes(y) = state.amplitudes(x);
  }
  return out;
}

double compare_reduced(double full_quantity, double reduced_quantity) {
  return std::abs(full_quantity - reduced_quantity);
}

}  // namespace uqd
