#include "uqd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "uqd/errors.hpp"

namespace uqd {

TransformedBasis build_transform(int n) {
  require_dense_reduced(n);
  const int d = reduced_dimension(n);
  TransformedBasis basis{n, Eigen::MatrixXd::Zero(d, d), {}};
  basis.labels.reserve(d);

  int col = 0;
  auto push = [&](BasisLabel label) {
    basis.labels.push_back(label);
    return col++;
  };

  for (int l = 0; l <= n; ++l) {
    basis.vectors(flat_index(n, {l, 0, 0}), push({BasisKind::Bottom, l, 0, l})) = 1.0;
    for (int m = 1; m <= n; ++m) {
      const TailSplit w = tail_split(n, m);
      const int upper = flat_index(n, {l, m, 0});
      const int lower = flat_index(n, {l, m - 1, 1});
      const int eta = push({BasisKind::Eta, l, m, l + m});
      basis.vectors(upper, eta) = w.stay;
      basis.vectors(lower, eta) = w.move;
      const int chi = push({BasisKind::Chi, l, m, l + m});
      basis.vectors(upper, chi) = w.move;
      basis.vectors(lower, chi) = -w.stay;
    }
    basis.vectors(flat_index(n, {l, n, 1}), push({BasisKind::Top, l, n, l + n + 1})) = 1.0;
  }
  return basis;
}

ReducedOperator transformed_pi0(const PovmTriple& triple, const TransformedBasis& basis) {
  if (triple.n != basis.n) throw UsageError("POVM and transformed basis built for different n");
  const Eigen::MatrixXcd v = basis.vectors.cast<Complex>();
  return {triple.n, v.transpose() * triple.pi0.entries() * v};
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

Block make_block(const Eigen::MatrixXcd& full, const TransformedBasis& basis,
                 std::vector<int> indices) {
  const int n = basis.n;
  const int sector = basis.labels[indices.front()].excitation;
  for (int i : indices) {
    if (basis.labels[i].excitation != sector) {
      throw StructuralError("block mixes excitation sectors " + std::to_string(sector) + " and " +
                            std::to_string(basis.labels[i].excitation));
    }
  }
  const BlockLabel label = sector <= n ? BlockLabel::J : BlockLabel::K;
  const int l = sector <= n ? sector : 2 * n + 1 - sector;
  const int size = static_cast<int>(indices.size());
  if (size != 2 * l + 1) {
    throw StructuralError("block in sector " + std::to_string(sector) + " has size " +
                          std::to_string(size) + ", expected " + std::to_string(2 * l + 1));
  }

  Eigen::MatrixXd sub(size, size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) sub(a, b) = full(indices[a], indices[b]).real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {label, l, std::move(indices), std::move(sub),
          std::vector<double>(ev.data(), ev.data() + ev.size())};
}

std::vector<Block> finish(std::vector<Block> blocks, int n) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.label != b.label) return a.label == BlockLabel::J;
    return a.l < b.l;
  });
  if (static_cast<int>(blocks.size()) != 2 * (n + 1)) {
    throw StructuralError("expected " + std::to_string(2 * (n + 1)) + " blocks, found " +
                          std::to_string(blocks.size()));
  }
  for (int i = 0; i < 2 * (n + 1); ++i) {
    const BlockLabel want = i <= n ? BlockLabel::J : BlockLabel::K;
    if (blocks[i].label != want || blocks[i].l != i % (n + 1)) {
      throw StructuralError("block multiset does not match {1,1,3,3,...,2n+1,2n+1}");
    }
  }
  return blocks;
}

void require_real_symmetric(const ReducedOperator& m) {
  const Eigen::MatrixXcd& a = m.entries();
  if (a.imag().cwiseAbs().maxCoeff() > 1e-10 || (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw UsageError("transformed Pi0 is not real symmetric");
  }
}

}  // namespace

std::vector<Block> extract_blocks(const ReducedOperator& transformed,
                                  const TransformedBasis& basis, double threshold) {
  if (transformed.n() != basis.n) throw UsageError("operator and basis built for different n");
  require_real_symmetric(transformed);
  const Eigen::MatrixXcd& a = transformed.entries();
  const int d = transformed.dimension();

  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(a(i, j)) > threshold) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }

  std::map<int, std::vector<int>> components;
  for (int i = 0; i < d; ++i) components[find_root(parent, i)].push_back(i);

  std::vector<Block> blocks;
  for (auto& [root, indices] : components) blocks.push_back(make_block(a, basis, std::move(indices)));
  return finish(std::move(blocks), basis.n);
}

std::vector<Block> sector_blocks(const ReducedOperator& transformed,
                                 const TransformedBasis& basis) {
  if (transformed.n() != basis.n) throw UsageError("operator and basis built for different n");
  require_real_symmetric(transformed);
  std::map<int, std::vector<int>> sectors;
  for (int i = 0; i < static_cast<int>(basis.labels.size()); ++i) {
    sectors[basis.labels[i].excitation].push_back(i);
  }
  std::vector<Block> blocks;
  for (auto& [sector, indices] : sectors) {
    blocks.push_back(make_block(transformed.entries(), basis, std::move(indices)));
  }
  return finish(std::move(blocks), basis.n);
}

ExtremeEigenvalues closed_form_extreme_eigenvalues(int n, const PovmParams& params) {
  require_copy_count(n);
  const double c1 = params.c1();
  const double c2 = params.c2();
  const double np1 = n + 1.0;
  const double radicand = c1 * c1 / 4.0 + c2 * c2 / 4.0 +
                          (static_cast<double>(n) * n - 2.0 * n - 1.0) * c1 * c2 / (2.0 * np1 * np1);
  const double root = std::sqrt(std::max(radicand, 0.0));
  const double centre = 1.0 - (c1 + c2) / 2.0;
  return {centre - root, centre + root};
}

PositivityCheck positivity_check(const PovmTriple& triple) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(triple.pi0.entries(),
                                                         Eigen::EigenvaluesOnly);
  const double numeric_min = solver.eigenvalues().minCoeff();
  const double closed = closed_form_extreme_eigenvalues(triple.n, triple.params).minus;
  return {numeric_min, closed, numeric_min >= -1e-9};
}

double constraint_c2(double c1, int n) {
  require_copy_count(n);
  if (!(c1 >= 0.0 && c1 <= 1.0)) {
    throw DomainError("constraint_c2: c1 must lie in [0, 1], got " + std::to_string(c1));
  }
  const double np1 = n + 1.0;
  const double denom = 1.0 - (2.0 * n + 1.0) * c1 / (np1 * np1);
  if (denom <= 0.0) throw DomainError("constraint_c2: c1 beyond the feasible arc");
  return std::clamp((1.0 - c1) / denom, 0.0, 1.0);
}

double pairing_defect(const std::vector<double>& eigenvalues, double pair_sum) {
  if (eigenvalues.size() <= 1) return 0.0;
  std::vector<double> rest(eigenvalues);
  std::sort(rest.begin(), rest.end());
  const auto unit = std::min_element(rest.begin(), rest.end(), [](double a, double b) {
    return std::abs(a - 1.0) < std::abs(b - 1.0);
  });
  rest.erase(unit);
  double worst = 0.0;
  for (std::size_t i = 0, j = rest.size() - 1; i < j; ++i, --j) {
    worst = std::max(worst, std::abs(rest[i] + rest[j] - pair_sum));
  }
  if (rest.size() % 2 != 0) worst = std::max(worst, std::abs(2.0 * rest[rest.size() / 2] - pair_sum));
  return worst;
}

SpectrumReport spectrum_report(const PovmTriple& triple) {
  const TransformedBasis basis = build_transform(triple.n);
  const ReducedOperator transformed = transformed_pi0(triple, basis);
  // Below this the c2 couplings vanish under the sparsity threshold.
  std::vector<Block> blocks = triple.params.c2() >= 1e-6 ? extract_blocks(transformed, basis)
                                                         : sector_blocks(transformed, basis);

  const double pair_sum = 2.0 - triple.params.c1() - triple.params.c2();
  double defect = 0.0;
  double numeric_min = 1.0;
  for (const Block& b : blocks) {
    defect = std::max(defect, pairing_defect(b.eigenvalues, pair_sum));
    numeric_min = std::min(numeric_min, b.eigenvalues.front());
  }
  const double closed = closed_form_extreme_eigenvalues(triple.n, triple.params).minus;
  return {triple.n, triple.params,  std::move(blocks), numeric_min,
          closed,   numeric_min >= -1e-9, defect};
}

}  // namespace uqd
