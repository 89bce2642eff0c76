#pragma once

// Optimal measurement over the whole prior range. Inside the validity range
// the genuine POVM wins; outside it one of the two projector complements is
// used alone and the other hypothesis is never identified.

#include <string>
#include <utility>

namespace uqd {

struct DiscriminatorConfig {
  int n;
  double eta1;

  // Throws DomainError for n < 1 or eta1 outside [0, 1].
  void validate() const;
};

enum class Regime { VonNeumann2, Povm, VonNeumann1 };

// "vn2", "povm", "vn1".
std::string to_string(Regime regime);
Regime regime_from_string(const std::string& tag);

struct StrategyDecision {
  int n;
  double eta1;
  Regime regime;
  double c1;
  double c2;
  double avg_success;

  bool operator==(const StrategyDecision&) const = default;
};

struct PriorInterval {
  double lo;
  double hi;
};

// [n^2 / (n^2 + (n+1)^2), (n+1)^2 / (n^2 + (n+1)^2)].
PriorInterval validity_range(int n);

// Saturating (c1, c2) for eta1 in the closed validity range, clamped into
// [0, 1]. DomainError outside it.
std::pair<double, double> optimal_c(int n, double eta1);

// n/(4n+2) (n + 1 - 2n sqrt(eta1 (1 - eta1))).
double avg_success_povm(int n, double eta1);

// eta_which * n / (2(n+1)).
double avg_success_projective(int n, double eta1, int which);

// (eta1 c1 + eta2 c2) n / (2(n+1)) for arbitrary feasible parameters.
double avg_success_linear(int n, double eta1, double c1, double c2);

// Average success along the positivity boundary c2 = constraint_c2(c1, n).
double avg_success_expression(int n, double eta1, double c1);

StrategyDecision decide(const DiscriminatorConfig& config);

// Golden-section maximiser of avg_success_expression over c1 in [0, 1]
// (the objective is concave there). Independent of the closed form.
double numeric_optimal_c1(int n, double eta1, double tolerance = 1e-12);

}  // namespace uqd
