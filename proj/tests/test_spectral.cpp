#include <cmath>
#include <random>

#include "block_reference.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "uqd/errors.hpp"
#include "uqd/spectral.hpp"

using namespace uqd;
using uqd::testing::best_corner_match;
using uqd::testing::max_abs;

TEST_CASE("transformed basis is orthogonal") {
  for (int n = 1; n <= 6; ++n) {
    const TransformedBasis b = build_transform(n);
    const auto d = b.vectors.cols();
    CHECK((b.vectors.transpose() * b.vectors - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(static_cast<int>(b.labels.size()) == reduced_dimension(n));
  }
}

TEST_CASE("transformed basis at n = 1 uses sqrt(1/2) throughout the m = 1 pair") {
  const TransformedBasis b = build_transform(1);
  int pairs = 0;
  for (std::size_t col = 0; col < b.labels.size(); ++col) {
    if (b.labels[col].kind != BasisKind::Eta && b.labels[col].kind != BasisKind::Chi) continue;
    ++pairs;
    for (int row = 0; row < b.vectors.rows(); ++row) {
      const double v = std::abs(b.vectors(row, col));
      CHECK((v == 0.0 || std::abs(v - std::sqrt(0.5)) < 1e-15));
    }
  }
  CHECK(pairs == 4);
}

TEST_CASE("transformed basis preserves norms") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  const TransformedBasis b = build_transform(3);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd v(b.vectors.rows());
    for (auto& x : v) x = g(rng);
    CHECK(std::abs((b.vectors * v).norm() - v.norm()) < 1e-12 * v.norm());
  }
}

TEST_CASE("eta vectors are the even-tail symmetric states") {
  // P_{E,T} is diagonal in the new basis: 1 on eta and edge vectors, 0 on chi.
  for (int n = 1; n <= 4; ++n) {
    const TransformedBasis b = build_transform(n);
    const Eigen::MatrixXd p =
        build_symmetric_projector(n, SymmetricBlock::EvenTail).entries().real();
    const Eigen::MatrixXd pt = b.vectors.transpose() * p * b.vectors;
    for (int i = 0; i < pt.rows(); ++i) {
      const double want = b.labels[i].kind == BasisKind::Chi ? 0.0 : 1.0;
      CHECK(std::abs(pt(i, i) - want) < 1e-12);
    }
    CHECK((pt - Eigen::MatrixXd(pt.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("transformed Pi0") {
  SUBCASE("zero parameters give identity") {
    const PovmTriple t = build_povm(2, PovmParams(0.0, 0.0));
    const ReducedOperator m = transformed_pi0(t, build_transform(2));
    CHECK(max_abs(m.entries() - ReducedOperator::identity(2).entries()) < 1e-12);
  }
  SUBCASE("n = 1 splits into sizes {1, 1, 3, 3}") {
    const PovmTriple t = build_povm(1, PovmParams(0.3, 0.4));
    const TransformedBasis b = build_transform(1);
    const auto blocks = extract_blocks(transformed_pi0(t, b), b);
    std::vector<int> sizes;
    for (const Block& blk : blocks) sizes.push_back(blk.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 3, 3});
  }
  SUBCASE("n = 2: everything outside the blocks vanishes") {
    const PovmTriple t = build_povm(2, PovmParams(0.3, 0.4));
    const TransformedBasis b = build_transform(2);
    const ReducedOperator m = transformed_pi0(t, b);
    Eigen::MatrixXcd rest = m.entries();
    for (const Block& blk : extract_blocks(m, b)) {
      for (int i : blk.indices)
        for (int j : blk.indices) rest(i, j) = 0.0;
    }
    CHECK(max_abs(rest) < 1e-10);
  }
  SUBCASE("mismatched n") {
    CHECK_THROWS_AS(transformed_pi0(build_povm(2, PovmParams(0.1, 0.1)), build_transform(3)),
                    UsageError);
  }
}

TEST_CASE("extract_blocks counts and dimensions") {
  const PovmTriple t4 = build_povm(4, PovmParams(0.35, 0.55));
  const TransformedBasis b4 = build_transform(4);
  CHECK(extract_blocks(transformed_pi0(t4, b4), b4).size() == 10);

  const PovmTriple t3 = build_povm(3, PovmParams(0.2, 0.7));
  const TransformedBasis b3 = build_transform(3);
  int total = 0;
  for (const Block& blk : extract_blocks(transformed_pi0(t3, b3), b3)) {
    CHECK(blk.size() == 2 * blk.l + 1);
    total += blk.size();
  }
  CHECK(total == 32);
}

TEST_CASE("extract_blocks rejects degenerate c2 = 0 but the report falls back to sectors") {
  const PovmTriple t = build_povm(2, PovmParams(0.5, 0.0));
  const TransformedBasis b = build_transform(2);
  CHECK_THROWS_AS(extract_blocks(transformed_pi0(t, b), b), StructuralError);
  const SpectrumReport r = spectrum_report(t);
  CHECK(r.blocks.size() == 6);
  CHECK(r.min_eigenvalue == doctest::Approx(0.5));
  CHECK(r.feasible);
}

TEST_CASE("J_1 at n = 2 matches the closed-form 3x3 matrix") {
  const double c1 = 0.3;
  const double c2 = 0.4;
  const PovmTriple t = build_povm(2, PovmParams(c1, c2));
  const TransformedBasis b = build_transform(2);
  const auto blocks = extract_blocks(transformed_pi0(t, b), b);
  const Block& j1 = blocks[1];
  REQUIRE(j1.label == BlockLabel::J);
  REQUIRE(j1.l == 1);
  CHECK(best_corner_match(j1.matrix, uqd::testing::reference_j1(2, c1, c2)) < 1e-10);
}

TEST_CASE("general J_l and K_l corners and last diagonal entries") {
  for (int n = 1; n <= 6; ++n) {
    const double c1 = 0.27;
    const double c2 = 0.61;
    const PovmTriple t = build_povm(n, PovmParams(c1, c2));
    const TransformedBasis b = build_transform(n);
    for (const Block& blk : extract_blocks(transformed_pi0(t, b), b)) {
      if (blk.l == 0) {
        CHECK(blk.matrix(0, 0) == doctest::Approx(1.0));
        continue;
      }
      CAPTURE(n);
      CAPTURE(blk.l);
      CHECK(best_corner_match(blk.matrix, uqd::testing::reference_corner(blk.label, n, blk.l, c1, c2)) <
            1e-10);
      CHECK(uqd::testing::nearest_diagonal(blk.matrix, uqd::testing::reference_last_diagonal(n, blk.l, c1, c2)) <
            1e-10);
    }
  }
}

TEST_CASE("closed-form extreme eigenvalues") {
  for (int n = 1; n <= 6; ++n) {
    for (double c : {0.1, 0.35, 0.8}) {
      const auto e = closed_form_extreme_eigenvalues(n, PovmParams(c, c));
      CHECK(e.minus == doctest::Approx(1.0 - c * (2.0 * n + 1.0) / (n + 1.0)).epsilon(1e-13));
    }
  }
  CHECK(std::abs(closed_form_extreme_eigenvalues(2, PovmParams(0.6, 0.6)).minus) < 1e-12);
  const auto zero = closed_form_extreme_eigenvalues(3, PovmParams(0.0, 0.0));
  CHECK(zero.minus == 1.0);
  CHECK(zero.plus == 1.0);
}

TEST_CASE("positivity check") {
  const PositivityCheck at_opt = positivity_check(build_povm(2, PovmParams(0.6, 0.6)));
  CHECK(std::abs(at_opt.numeric_min) < 1e-9);
  CHECK(at_opt.feasible);

  const PositivityCheck full = positivity_check(build_povm(2, PovmParams(1.0, 1.0)));
  CHECK(full.closed_form_min == doctest::Approx(1.0 - 5.0 / 3.0));
  CHECK(full.numeric_min == doctest::Approx(1.0 - 5.0 / 3.0).epsilon(1e-9));
  CHECK_FALSE(full.feasible);

  const PositivityCheck none = positivity_check(build_povm(2, PovmParams(0.0, 0.0)));
  CHECK(none.numeric_min == doctest::Approx(1.0));
  CHECK(none.feasible);
}

TEST_CASE("constraint curve") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(constraint_c2(1.0, n) == 0.0);
    CHECK(constraint_c2(0.0, n) == 1.0);
  }
  CHECK(constraint_c2(0.6, 2) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK_THROWS_AS(constraint_c2(1.2, 2), DomainError);
  CHECK_THROWS_AS(constraint_c2(-0.1, 2), DomainError);
  // The boundary zeroes the closed-form minimum eigenvalue.
  for (int n = 1; n <= 6; ++n) {
    for (double c1 = 0.05; c1 < 1.0; c1 += 0.1) {
      const double c2 = constraint_c2(c1, n);
      CHECK(std::abs(closed_form_extreme_eigenvalues(n, PovmParams(c1, c2)).minus) < 1e-12);
    }
  }
}

TEST_CASE("pairing_defect") {
  CHECK(pairing_defect({1.0}, 1.4) == 0.0);
  CHECK(pairing_defect({0.2, 1.0, 1.2}, 1.4) == doctest::Approx(0.0));
  CHECK(pairing_defect({0.2, 1.0, 1.3}, 1.4) == doctest::Approx(0.1));
}

TEST_CASE("property: spectra over a parameter grid") {
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= 9; ++i) {
      for (int j = 1; j <= 9; ++j) {
        const PovmParams params(0.1 * i, 0.1 * j);
        const PovmTriple t = build_povm(n, params);
        const SpectrumReport r = spectrum_report(t);
        CAPTURE(n);
        CAPTURE(params.c1());
        CAPTURE(params.c2());
        CHECK(r.max_pairing_defect < 1e-9);
        CHECK(std::abs(r.min_eigenvalue - r.closed_form_min) < 1e-9);

        // Both extreme eigenvalues appear in every block with l >= 1.
        const auto e = closed_form_extreme_eigenvalues(n, params);
        for (const Block& blk : r.blocks) {
          if (blk.l == 0) continue;
          auto near = [&](double x) {
            return std::any_of(blk.eigenvalues.begin(), blk.eigenvalues.end(),
                               [&](double v) { return std::abs(v - x) < 1e-9; });
          };
          CHECK(near(e.minus));
          CHECK(near(e.plus));
        }

        // Feasibility is symmetric in (c1, c2).
        const PovmTriple swapped = build_povm(n, PovmParams(params.c2(), params.c1()));
        CHECK(positivity_check(t).feasible == positivity_check(swapped).feasible);
      }
    }
  }
}
