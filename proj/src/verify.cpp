#include "uqd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "uqd/errors.hpp"
#include "uqd/fullspace.hpp"
#include "uqd/povm.hpp"
#include "uqd/sampler.hpp"
#include "uqd/spectral.hpp"

namespace uqd {

namespace {

struct Pair {
  BlochQubit psi1;
  BlochQubit psi2;
};

std::vector<Pair> seeded_pairs(int count, std::uint64_t seed) {
  std::vector<Pair> out;
  for (int i = 0; i < count; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    const BlochQubit a = sample_qubit(rng);
    const BlochQubit b = sample_qubit(rng);
    out.push_back({a, b});
  }
  // Fixed corner cases.
  out.push_back({BlochQubit::zero(), BlochQubit::one()});
  out.push_back({BlochQubit(1.0, 2.0), BlochQubit(1.0, 2.0)});
  return out;
}

constexpr Hypothesis kBoth[] = {Hypothesis::First, Hypothesis::Second};

}  // namespace

std::vector<CheckResult> run_verification(int n_max, int pairs, std::uint64_t seed) {
  require_copy_count(n_max);
  require_full_space(n_max);

  std::vector<CheckResult> results;
  const auto sample = seeded_pairs(pairs, seed);
  const PovmParams generic(0.3, 0.4);

  // Returns false once a check fails so the caller can stop.
  auto record = [&](const std::string& name, double tolerance, const std::function<double()>& f) {
    const double dev = f();
    results.push_back({name, dev < tolerance, dev, tolerance});
    return results.back().passed;
  };

  for (int n = 1; n <= n_max; ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    const Eigen::MatrixXcd image = reduced_basis_image(n);
    const FullOperator p_even = symmetric_projector_full(n, block_positions(n, SymmetricBlock::EvenTail));
    const FullOperator p_odd = symmetric_projector_full(n, block_positions(n, SymmetricBlock::OddTail));
    const PovmTriple triple = build_povm(n, generic);
    const ReducedOperator r_even = build_symmetric_projector(n, SymmetricBlock::EvenTail);
    const ReducedOperator r_odd = build_symmetric_projector(n, SymmetricBlock::OddTail);
    auto full_projector = [&](Hypothesis h) -> const FullOperator& {
      return h == Hypothesis::First ? p_even : p_odd;
    };
    auto reduced_projector = [&](Hypothesis h) -> const ReducedOperator& {
      return h == Hypothesis::First ? r_even : r_odd;
    };

    const bool ok =
        record("reduced-basis-orthonormal" + tag, 1e-12,
               [&] {
                 const auto d = image.cols();
                 return (image.adjoint() * image - Eigen::MatrixXcd::Identity(d, d))
                     .cwiseAbs()
                     .maxCoeff();
               }) &&
        record("input-state-embedding" + tag, 1e-10,
               [&] {
                 double worst = 0.0;
                 for (const Pair& p : sample) {
                   for (Hypothesis h : kBoth) {
                     const FullState full = tensor_input(p.psi1, p.psi2, n, h);
                     const ReducedState reduced = build_input_state(p.psi1, p.psi2, n, h);
                     const Eigen::VectorXcd lifted = image * reduced.amplitudes();
                     worst = std::max(worst, (lifted - full.amplitudes).cwiseAbs().maxCoeff());
                   }
                 }
                 return worst;
               }) &&
        record("projector-trace" + tag, 1e-9,
               [&] {
                 const double full_rank = (n + 2.0) * std::pow(2.0, n);
                 const double reduced_rank = (n + 1.0) * (n + 2.0);
                 double worst = 0.0;
                 for (Hypothesis h : kBoth) {
                   worst = std::max(worst, compare_reduced(full_projector(h).trace().real(), full_rank));
                   worst = std::max(worst,
                                    compare_reduced(reduced_projector(h).entries().trace().real(), reduced_rank));
                 }
                 return worst;
               }) &&
        record("projector-expectation" + tag, 1e-10,
               [&] {
                 double worst = 0.0;
                 for (const Pair& p : sample) {
                   for (Hypothesis h : kBoth) {
                     const double full = expectation(full_projector(h), tensor_input(p.psi1, p.psi2, n, h));
                     const double reduced =
                         reduced_projector(h).expectation(build_input_state(p.psi1, p.psi2, n, h));
                     const double closed = closed_form_expectation(p.psi1, p.psi2, n, h);
                     worst = std::max({worst, compare_reduced(full, reduced), compare_reduced(full, closed)});
                   }
                 }
                 return worst;
               }) &&
        record("success-probability" + tag, 1e-10,
               [&] {
                 double worst = 0.0;
                 for (Hypothesis h : kBoth) {
                   const FullOperator pi = povm_element_full(n, generic, h);
                   for (const Pair& p : sample) {
                     const double full = expectation(pi, tensor_input(p.psi1, p.psi2, n, h));
                     const double reduced =
                         success_probability(build_input_state(p.psi1, p.psi2, n, h), triple, h);
                     worst = std::max(worst, compare_reduced(full, reduced));
                   }
                 }
                 return worst;
               }) &&
        record("no-error" + tag, 1e-10,
               [&] {
                 double worst = 0.0;
                 for (const Pair& p : sample) worst = std::max(worst, no_error_check(triple, p.psi1, p.psi2));
                 return worst;
               }) &&
        record("block-structure" + tag, 0.5,
               [&] {
                 try {
                   extract_blocks(transformed_pi0(triple, build_transform(n)), build_transform(n));
                   return 0.0;
                 } catch (const StructuralError&) {
                   return 1.0;
                 }
               }) &&
        record("eigenvalue-pairing" + tag, 1e-9,
               [&] { return spectrum_report(triple).max_pairing_defect; }) &&
        record("closed-form-minimum" + tag, 1e-9, [&] {
          double worst = 0.0;
          for (int i = 1; i <= 9; ++i) {
            for (int j = 1; j <= 9; ++j) {
              const PovmParams params(0.1 * i, 0.1 * j);
              const PositivityCheck check = positivity_check(build_povm(n, params));
              worst = std::max(worst, std::abs(check.numeric_min - check.closed_form_min));
            }
          }
          return worst;
        });
    if (!ok) break;
  }
  return results;
}

}  // namespace uqd
