#pragma once

// Brute-force ground truth in the full 2^(2n+1)-dimensional register space.
//
// Positions are numbered 1..2n+1: psi1 on the odd ones up to 2n-1, psi2 on
// the even ones up to 2n, and the tail at 2n+1. Position 1 is the most
// significant bit of a basis-state index. Dense storage, so n is capped at 5.

#include <vector>

#include <Eigen/Dense>

#include "uqd/povm.hpp"
#include "uqd/symmetric_core.hpp"

namespace uqd {

inline constexpr int kFullSpaceMax = 5;

// Throws ResourceError above kFullSpaceMax.
void require_full_space(int n);

inline int full_dimension(int n) { return 1 << (2 * n + 1); }

struct FullState {
  int n;
  Eigen::VectorXcd amplitudes;
};

using FullOperator = Eigen::MatrixXcd;

std::vector<int> odd_positions(int n);
std::vector<int> even_positions(int n);
inline int tail_position(int n) { return 2 * n + 1; }
// The n+1 positions a SymmetricBlock acts on.
std::vector<int> block_positions(int n, SymmetricBlock block);

// Literal tensor product psi1 psi2 psi1 psi2 ... psi_which.
FullState tensor_input(const BlochQubit& psi1, const BlochQubit& psi2, int n, Hypothesis which);

// Sum_k |e_k><e_k| over Dicke states on `positions` (bitmask enumeration),
// tensored with identity elsewhere. UsageError unless positions has n+1
// distinct entries in 1..2n+1.
FullOperator symmetric_projector_full(int n, const std::vector<int>& positions);

// Pi_which = c_which (I - P) with P the matching full-space projector.
FullOperator povm_element_full(int n, const PovmParams& params, Hypothesis which);

double expectation(const FullOperator& op, const FullState& state);

// Normalised Dicke state with k ones spread over `positions`; every other
// position holds |0>.
Eigen::VectorXcd dicke_state_full(int n, const std::vector<int>& positions, int k);

// Full-space images of the reduced basis vectors |e_l>_O |e_m>_E |t>_T,
// one column per flat reduced index.
Eigen::MatrixXcd reduced_basis_image(int n);

// Coordinates of a full state in the reduced basis.
Eigen::VectorXcd project_to_reduced(const FullState& state);

// Exchange the qubits at positions a and b.
FullState apply_transposition(const FullState& state, int a, int b);

// |full - reduced|.
double compare_reduced(double full_quantity, double reduced_quantity);

}  // namespace uqd
