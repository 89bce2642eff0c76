#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "test_util.hpp"
#include "uqd/errors.hpp"
#include "uqd/povm.hpp"

using namespace uqd;
using uqd::testing::kPi;
using uqd::testing::max_abs;
using uqd::testing::random_qubit;

namespace {

double min_eigenvalue(const ReducedOperator& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> s(a.entries(), Eigen::EigenvaluesOnly);
  return s.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("PovmParams range") {
  CHECK_NOTHROW(PovmParams(0.0, 1.0));
  CHECK_THROWS_AS(PovmParams(-0.01, 0.5), DomainError);
  CHECK_THROWS_AS(PovmParams(0.5, 1.01), DomainError);
}

TEST_CASE("build_povm") {
  SUBCASE("zero parameters leave the failure element at identity") {
    for (int n = 1; n <= 4; ++n) {
      const PovmTriple t = build_povm(n, PovmParams(0.0, 0.0));
      CHECK(max_abs(t.pi0.entries() - ReducedOperator::identity(n).entries()) == 0.0);
    }
  }
  SUBCASE("c1 = 1, c2 = 0 gives a projector") {
    const PovmTriple t = build_povm(2, PovmParams(1.0, 0.0));
    CHECK(max_abs(t.pi1.entries() * t.pi1.entries() - t.pi1.entries()) < 1e-10);
  }
  SUBCASE("completeness and positivity of the conclusive elements") {
    for (int n = 1; n <= 5; ++n) {
      for (double c1 : {0.0, 0.25, 0.7, 1.0}) {
        for (double c2 : {0.0, 0.4, 1.0}) {
          const PovmTriple t = build_povm(n, PovmParams(c1, c2));
          const Eigen::MatrixXcd sum = t.pi0.entries() + t.pi1.entries() + t.pi2.entries();
          CHECK(max_abs(sum - ReducedOperator::identity(n).entries()) < 1e-12);
          CHECK(min_eigenvalue(t.pi1) > -1e-12);
          CHECK(min_eigenvalue(t.pi2) > -1e-12);
          CHECK(t.pi0.hermiticity_defect() < 1e-12);
        }
      }
    }
  }
  SUBCASE("symmetric optimum at n=2 saturates positivity") {
    const PovmTriple t = build_povm(2, PovmParams(0.6, 0.6));
    CHECK(std::abs(min_eigenvalue(t.pi0)) < 1e-10);
  }
}

TEST_CASE("success probability examples") {
  std::mt19937_64 rng(21);
  SUBCASE("identical qubits are never identified") {
    for (int n = 1; n <= 4; ++n) {
      const BlochQubit q = random_qubit(rng);
      const PovmTriple t = build_povm(n, PovmParams(0.8, 0.9));
      for (Hypothesis h : {Hypothesis::First, Hypothesis::Second}) {
        CHECK(std::abs(success_probability(build_input_state(q, q, n, h), t, h)) < 1e-12);
      }
    }
  }
  SUBCASE("orthogonal basis qubits: c1 n/(n+1)") {
    for (int n = 1; n <= 5; ++n) {
      const double c1 = 0.55;
      const PovmTriple t = build_povm(n, PovmParams(c1, 0.3));
      const auto s = build_input_state(BlochQubit::zero(), BlochQubit::one(), n, Hypothesis::First);
      CHECK(success_probability(s, t, Hypothesis::First) ==
            doctest::Approx(c1 * n / (n + 1.0)).epsilon(1e-12));
    }
  }
  SUBCASE("matrix route, projector route and closed form agree") {
    for (int n = 1; n <= 5; ++n) {
      const PovmParams params(0.35, 0.8);
      const PovmTriple t = build_povm(n, params);
      const ReducedOperator pe = build_symmetric_projector(n, SymmetricBlock::EvenTail);
      const ReducedOperator po = build_symmetric_projector(n, SymmetricBlock::OddTail);
      for (int trial = 0; trial < 100; ++trial) {
        const BlochQubit a = random_qubit(rng);
        const BlochQubit b = random_qubit(rng);
        for (Hypothesis h : {Hypothesis::First, Hypothesis::Second}) {
          const auto s = build_input_state(a, b, n, h);
          const double p = success_probability(s, t, h);
          const double c = params.c(h);
          const double proj = (h == Hypothesis::First ? pe : po).expectation(s);
          CHECK(std::abs(p - (c - c * proj)) < 1e-10);
          CHECK(std::abs(p - closed_form_success(a, b, n, params, h)) < 1e-10);
        }
      }
    }
  }
  SUBCASE("dimension mismatch") {
    const PovmTriple t = build_povm(2, PovmParams(0.5, 0.5));
    const auto s = build_input_state(BlochQubit::zero(), BlochQubit::one(), 3, Hypothesis::First);
    CHECK_THROWS_AS(success_probability(s, t, Hypothesis::First), UsageError);
  }
}

TEST_CASE("closed-form expectation") {
  std::mt19937_64 rng(8);
  SUBCASE("identical qubits give 1") {
    for (int n : {1, 2, 5, 30, 100}) {
      const BlochQubit q = random_qubit(rng);
      for (Hypothesis h : {Hypothesis::First, Hypothesis::Second}) {
        CHECK(closed_form_expectation(q, q, n, h) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  SUBCASE("|0>, |1>: 1/(n+1)") {
    for (int n = 1; n <= 8; ++n) {
      CHECK(closed_form_expectation(BlochQubit::zero(), BlochQubit::one(), n, Hypothesis::First) ==
            doctest::Approx(1.0 / (n + 1)).epsilon(1e-12));
    }
  }
  SUBCASE("matches the matrix expectation, n = 4 and n = 12") {
    for (int n : {4, 12}) {
      const ReducedOperator pe = build_symmetric_projector(n, SymmetricBlock::EvenTail);
      const ReducedOperator po = build_symmetric_projector(n, SymmetricBlock::OddTail);
      for (int trial = 0; trial < 50; ++trial) {
        const BlochQubit a = random_qubit(rng);
        const BlochQubit b = random_qubit(rng);
        CHECK(std::abs(closed_form_expectation(a, b, n, Hypothesis::First) -
                       pe.expectation(build_input_state(a, b, n, Hypothesis::First))) < 1e-10);
        CHECK(std::abs(closed_form_expectation(a, b, n, Hypothesis::Second) -
                       po.expectation(build_input_state(a, b, n, Hypothesis::Second))) < 1e-10);
      }
    }
  }
  SUBCASE("log-space route stays in [0, 1] and is continuous across the cap") {
    const BlochQubit a(1.1, 0.3);
    const BlochQubit b(2.0, 4.0);
    const double at60 = closed_form_expectation(a, b, 60, Hypothesis::First);
    const double at61 = closed_form_expectation(a, b, 61, Hypothesis::First);
    CHECK(std::abs(at60 - at61) < 1e-2);
    for (int n : {61, 200, 1000}) {
      const double v = closed_form_expectation(a, b, n, Hypothesis::First);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("no leakage between hypotheses") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 5; ++n) {
    const PovmTriple t = build_povm(n, PovmParams(0.9, 0.7));
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(no_error_check(t, random_qubit(rng), random_qubit(rng)) < 1e-10);
    }
    const BlochQubit q = random_qubit(rng);
    CHECK(no_error_check(t, q, q) < 1e-10);
  }
  CHECK(no_error_check(build_povm(3, PovmParams(1.0, 1.0)), BlochQubit::zero(), BlochQubit::one()) <
        1e-10);
}

TEST_CASE("total success") {
  CHECK(total_success(0.4, 0.4, 0.17) == doctest::Approx(0.4));
  CHECK(total_success(0.3, 0.9, 1.0) == doctest::Approx(0.3));
  CHECK(total_success(0.3, 0.1, 0.25) == doctest::Approx(0.15));
  CHECK_THROWS_AS(total_success(0.3, 0.1, 1.2), DomainError);
}

TEST_CASE("property: global phase invariance and linear scaling") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const BlochQubit a = random_qubit(rng);
    const BlochQubit b = random_qubit(rng);
    const double delta = u(rng);
    const BlochQubit a2(a.theta(), a.phi() + delta);
    const BlochQubit b2(b.theta(), b.phi() + delta);
    const PovmTriple t = build_povm(n, PovmParams(0.6, 0.45));
    for (Hypothesis h : {Hypothesis::First, Hypothesis::Second}) {
      const double p = success_probability(build_input_state(a, b, n, h), t, h);
      const double p2 = success_probability(build_input_state(a2, b2, n, h), t, h);
      CHECK(std::abs(p - p2) < 1e-12);
    }
    // p1 is linear in c1 with c2 fixed.
    const auto s = build_input_state(a, b, n, Hypothesis::First);
    const double half = success_probability(s, build_povm(n, PovmParams(0.5, 0.2)), Hypothesis::First);
    const double full = success_probability(s, build_povm(n, PovmParams(1.0, 0.2)), Hypothesis::First);
    CHECK(std::abs(full - 2.0 * half) < 1e-12);
  }
}
