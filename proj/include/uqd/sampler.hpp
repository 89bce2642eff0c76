#pragma once

#include <cstdint>

#include "uqd/povm.hpp"
#include "uqd/strategy.hpp"
#include "uqd/symmetric_core.hpp"

namespace uqd {

/// Counter-based stream: draw i of stream s under key k is a pure function
/// of (k, s, i), built from the SplitMix64 finaliser. Monte Carlo sample j
/// uses stream j, so any partition of the samples across workers reproduces
/// the serial result.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Uniform (Haar) qubit: cos(theta) uniform on [-1, 1], phi uniform on [0, 2 pi).
BlochQubit sample_qubit(CounterRng& rng);

struct McReport {
  std::uint64_t samples;
  double mean_success;
  double std_error;
  double analytic;
  // Pairs whose leakage <Psi1|Pi2|Psi1> or <Psi2|Pi1|Psi2> exceeded 1e-10.
  std::uint64_t error_events;

  bool operator==(const McReport&) const = default;
};

struct ProjectorMeanReport {
  std::uint64_t samples;
  double mean;
  double std_error;
  double analytic;  // (n+2) / (2(n+1))
};

struct OutcomeCounts {
  std::uint64_t identify1 = 0;
  std::uint64_t identify2 = 0;
  std::uint64_t fail = 0;
  std::uint64_t shots = 0;
  // Outcomes naming the wrong input; must stay zero.
  std::uint64_t error_events = 0;

  bool operator==(const OutcomeCounts&) const = default;
};

inline constexpr std::uint64_t kMinMonteCarloSamples = 1000;

// Mean of eta1 p1 + eta2 p2 over Bloch-uniform pairs, with p_i evaluated as
// dense reduced-basis expectations. workers = 0 picks the hardware count.
McReport mc_average_success(int n, const PovmParams& params, double eta1, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers = 0);

// Mean of closed_form_expectation(psi1, psi2, n, First) over uniform pairs.
ProjectorMeanReport mc_projector_mean(int n, std::uint64_t samples, std::uint64_t seed,
                                      unsigned workers = 0);

// Per shot: draw the true input with prior (eta1, 1 - eta1), then an outcome
// from the decide()-selected POVM. Throws StructuralError if the leakage
// of that POVM on these inputs exceeds 1e-10.
OutcomeCounts simulate_outcomes(const BlochQubit& psi1, const BlochQubit& psi2,
                                const DiscriminatorConfig& config, std::uint64_t shots,
                                std::uint64_t seed);

}  // namespace uqd
