#include "uqd/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uqd/errors.hpp"

namespace uqd {

PovmParams::PovmParams(double c1, double c2) : c1_(c1), c2_(c2) {
  if (!(c1 >= 0.0 && c1 <= 1.0) || !(c2 >= 0.0 && c2 <= 1.0)) {
    throw DomainError("POVM parameters must lie in [0, 1], got c1=" + std::to_string(c1) +
                      " c2=" + std::to_string(c2));
  }
}

void require_prior(double eta1) {
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
    throw DomainError("prior eta1 must lie in [0, 1], got " + std::to_string(eta1));
  }
}

PovmTriple build_povm(int n, const PovmParams& params) {
  const ReducedOperator id = ReducedOperator::identity(n);
  ReducedOperator pi1 = params.c1() * (id - build_symmetric_projector(n, SymmetricBlock::EvenTail));
  ReducedOperator pi2 = params.c2() * (id - build_symmetric_projector(n, SymmetricBlock::OddTail));
  ReducedOperator pi0 = id - pi1 - pi2;
  return {n, params, std::move(pi1), std::move(pi2), std::move(pi0)};
}

double success_probability(const ReducedState& state, const PovmTriple& triple,
                           Hypothesis which) {
  if (state.n() != triple.n) throw UsageError("state and POVM built for different n");
  return triple.element(which).expectation(state);
}

namespace {

// C(n,k) cos^a sin^b, evaluated in log space beyond the exact-binomial cap.
double weighted_power(int n, int k, double c, int a, double s, int b) {
  if (n <= kExactBinomialMax) {
    return binomial_real(n, k) * std::pow(c, a) * std::pow(s, b);
  }
  auto scaled_log = [](int e, double x) {
    if (e == 0) return 0.0;
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    return e * std::log(x);
  };
  return std::exp(log_binomial(n, k) + scaled_log(a, c) + scaled_log(b, s));
}

}  // namespace

double closed_form_expectation(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                               Hypothesis which) {
  require_copy_count(n);
  const BlochQubit& tail = which == Hypothesis::First ? psi1 : psi2;
  const BlochQubit& block = which == Hypothesis::First ? psi2 : psi1;

  const double ci = std::cos(tail.theta() / 2.0);
  const double si = std::sin(tail.theta() / 2.0);
  const double cj = std::cos(block.theta() / 2.0);
  const double sj = std::sin(block.theta() / 2.0);
  const double np1 = n + 1.0;

  double diagonal = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double weight = (n - k + 1) / np1 * ci * ci + (k + 1) / np1 * si * si;
    diagonal += weight * weighted_power(n, k, cj, 2 * (n - k), sj, 2 * k);
  }

  // cos^{2(n-k)} sin^{2k} cot = cos^{2(n-k)+1} sin^{2k-1}; the product form
  // stays finite at theta_j in {0, pi}.
  double cross = 0.0;
  for (int k = 1; k <= n; ++k) {
    cross += 2.0 * k / np1 * weighted_power(n, k, cj, 2 * (n - k) + 1, sj, 2 * k - 1);
  }
  cross *= ci * si * std::cos(tail.phi() - block.phi());

  return std::clamp(diagonal + cross, 0.0, 1.0);
}

double closed_form_success(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                           const PovmParams& params, Hypothesis which) {
  return params.c(which) * (1.0 - closed_form_expectation(psi1, psi2, n, which));
}

double no_error_check(const PovmTriple& triple, const BlochQubit& psi1, const BlochQubit& psi2) {
  const ReducedState first = build_input_state(psi1, psi2, triple.n, Hypothesis::First);
  const ReducedState second = build_input_state(psi1, psi2, triple.n, Hypothesis::Second);
  return std::max(triple.pi2.expectation(first), triple.pi1.expectation(second));
}

double total_success(double p1, double p2, double eta1) {
  require_prior(eta1);
  return eta1 * p1 + (1.0 - eta1) * p2;
}

}  // namespace uqd
