#include "uqd/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "uqd/errors.hpp"

namespace uqd {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr double kLeakageLimit = 1e-10;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

unsigned resolve_workers(unsigned workers, std::uint64_t samples) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));
}

// Evaluates body(i) for i in [0, count) into a vector, split into contiguous
// chunks over `workers` threads. Output depends only on body, not on workers.
template <typename T, typename Body>
std::vector<T> parallel_map(std::uint64_t count, unsigned workers, Body body) {
  std::vector<T> out(count);
  workers = resolve_workers(workers, count);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) out[i] = body(i);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&out, &body, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i) out[i] = body(i);
    });
  }
  return out;
}

struct MeanAndError {
  double mean;
  double std_error;
};

MeanAndError summarize(const std::vector<double>& values) {
  const double count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / count;
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double variance = values.size() > 1 ? sq / (count - 1.0) : 0.0;
  return {mean, std::sqrt(variance / count)};
}

void require_samples(std::uint64_t samples) {
  if (samples < kMinMonteCarloSamples) {
    throw DomainError("Monte Carlo needs at least " + std::to_string(kMinMonteCarloSamples) +
                      " samples");
  }
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream * kGolden + kGolden))) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

BlochQubit sample_qubit(CounterRng& rng) {
  const double cos_theta = 1.0 - 2.0 * rng.next_unit();
  const double phi = 2.0 * BlochQubit::kPi * rng.next_unit();
  return {std::acos(std::clamp(cos_theta, -1.0, 1.0)), phi};
}

McReport mc_average_success(int n, const PovmParams& params, double eta1, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers) {
  require_samples(samples);
  require_prior(eta1);
  const PovmTriple triple = build_povm(n, params);

  struct Draw {
    double success;
    bool leaked;
  };
  const auto draws = parallel_map<Draw>(samples, workers, [&](std::uint64_t i) {
    CounterRng rng(seed, i);
    const BlochQubit psi1 = sample_qubit(rng);
    const BlochQubit psi2 = sample_qubit(rng);
    const ReducedState first = build_input_state(psi1, psi2, n, Hypothesis::First);
    const ReducedState second = build_input_state(psi1, psi2, n, Hypothesis::Second);
    const double p1 = triple.pi1.expectation(first);
    const double p2 = triple.pi2.expectation(second);
    const double leak = std::max(triple.pi2.expectation(first), triple.pi1.expectation(second));
    return Draw{total_success(p1, p2, eta1), leak > kLeakageLimit};
  });

  std::vector<double> values(samples);
  std::uint64_t errors = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    values[i] = draws[i].success;
    errors += draws[i].leaked ? 1 : 0;
  }
  const MeanAndError stats = summarize(values);
  return {samples, stats.mean, stats.std_error,
          avg_success_linear(n, eta1, params.c1(), params.c2()), errors};
}

ProjectorMeanReport mc_projector_mean(int n, std::uint64_t samples, std::uint64_t seed,
                                      unsigned workers) {
  require_samples(samples);
  require_copy_count(n);
  const auto values = parallel_map<double>(samples, workers, [&](std::uint64_t i) {
    CounterRng rng(seed, i);
    const BlochQubit psi1 = sample_qubit(rng);
    const BlochQubit psi2 = sample_qubit(rng);
    return closed_form_expectation(psi1, psi2, n, Hypothesis::First);
  });
  const MeanAndError stats = summarize(values);
  return {samples, stats.mean, stats.std_error, (n + 2.0) / (2.0 * (n + 1.0))};
}

OutcomeCounts simulate_outcomes(const BlochQubit& psi1, const BlochQubit& psi2,
                                const DiscriminatorConfig& config, std::uint64_t shots,
                                std::uint64_t seed) {
  if (shots < 1) throw DomainError("simulate_outcomes needs at least one shot");
  const StrategyDecision decision = decide(config);
  const PovmTriple triple = build_povm(config.n, PovmParams(decision.c1, decision.c2));
  if (no_error_check(triple, psi1, psi2) > kLeakageLimit) {
    throw StructuralError("POVM leaks between hypotheses beyond 1e-10");
  }

  // Outcome probabilities (identify1, identify2) for each true input.
  struct Row {
    double first;
    double second;
  };
  Row rows[2];
  for (Hypothesis truth : {Hypothesis::First, Hypothesis::Second}) {
    const ReducedState state = build_input_state(psi1, psi2, config.n, truth);
    rows[static_cast<int>(truth) - 1] = {std::clamp(triple.pi1.expectation(state), 0.0, 1.0),
                                         std::clamp(triple.pi2.expectation(state), 0.0, 1.0)};
  }

  OutcomeCounts counts;
  CounterRng rng(seed, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const bool truth_first = rng.next_unit() < config.eta1;
    const Row& row = rows[truth_first ? 0 : 1];
    const double u = rng.next_unit();
    if (u < row.first) {
      ++counts.identify1;
      if (!truth_first) ++counts.error_events;
    } else if (u < row.first + row.second) {
      ++counts.identify2;
      if (truth_first) ++counts.error_events;
    } else {
      ++counts.fail;
    }
  }
  counts.shots = shots;
  return counts;
}

}  // namespace uqd
