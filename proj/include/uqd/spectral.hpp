#pragma once

// Spectral structure of the failure element Pi0.
//
// The transformed basis replaces each tail-adjacent pair
// (|e_l>|e_m>|0>, |e_l>|e_{m-1}>|1>) by its even-tail symmetric combination
// eta_lm and the orthogonal combination chi_lm; the edge vectors
// |e_l>|e_0>|0> and |e_l>|e_n>|1> are kept. In this basis P_{E,T} is
// diagonal and Pi0 splits into blocks J_l, K_l of size 2l+1.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uqd/povm.hpp"

namespace uqd {

enum class BasisKind { Eta, Chi, Bottom, Top };

struct BasisLabel {
  BasisKind kind;
  int l;
  int m;
  // Total number of |1>'s, l + m + t; conserved by Pi0.
  int excitation;
};

struct TransformedBasis {
  int n;
  // Columns are the new basis vectors expressed in the reduced basis.
  Eigen::MatrixXd vectors;
  std::vector<BasisLabel> labels;
};

TransformedBasis build_transform(int n);

// V^T Pi0 V.
ReducedOperator transformed_pi0(const PovmTriple& triple, const TransformedBasis& basis);

enum class BlockLabel { J, K };

inline const char* to_string(BlockLabel label) { return label == BlockLabel::J ? "J" : "K"; }

struct Block {
  BlockLabel label;
  int l;
  std::vector<int> indices;  // positions in the transformed basis, ascending
  Eigen::MatrixXd matrix;
  std::vector<double> eigenvalues;  // ascending

  int size() const { return static_cast<int>(indices.size()); }
};

// Splits the transformed Pi0 into connected components of its sparsity graph
// (|entry| > threshold). Each component must sit inside one excitation sector
// N and have size 2l+1, where l = N for N <= n (J_l) and l = 2n+1-N
// otherwise (K_l). Throws StructuralError if not. Blocks come back ordered
// J_0..J_n, K_0..K_n.
std::vector<Block> extract_blocks(const ReducedOperator& transformed,
                                  const TransformedBasis& basis, double threshold = 1e-9);

// Same blocks grouped directly by excitation sector; needed when c2 = 0,
// where Pi0 is already diagonal and components degenerate to singletons.
std::vector<Block> sector_blocks(const ReducedOperator& transformed,
                                 const TransformedBasis& basis);

struct ExtremeEigenvalues {
  double minus;
  double plus;
};

// 1 - (c1+c2)/2 -/+ sqrt(c1^2/4 + c2^2/4 + (n^2-2n-1) c1 c2 / (2(n+1)^2)).
ExtremeEigenvalues closed_form_extreme_eigenvalues(int n, const PovmParams& params);

struct PositivityCheck {
  double numeric_min;
  double closed_form_min;
  bool feasible;  // numeric_min >= -1e-9
};

PositivityCheck positivity_check(const PovmTriple& triple);

// Boundary of the positivity region: c2 = (1 - c1) / (1 - (2n+1) c1 / (n+1)^2),
// clamped to [0, 1]. DomainError for c1 outside [0, 1].
double constraint_c2(double c1, int n);

// Within one block: drop the eigenvalue nearest 1, pair the remaining
// ascending list from both ends, return max |a + b - pair_sum|. Zero for a
// 1x1 block.
double pairing_defect(const std::vector<double>& eigenvalues, double pair_sum);

struct SpectrumReport {
  int n;
  PovmParams params;
  std::vector<Block> blocks;
  double min_eigenvalue;
  double closed_form_min;
  bool feasible;
  // Largest pairing_defect over all blocks, against 2 - c1 - c2.
  double max_pairing_defect;
};

SpectrumReport spectrum_report(const PovmTriple& triple);

}  // namespace uqd
