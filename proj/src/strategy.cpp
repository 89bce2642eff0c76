#include "uqd/strategy.hpp"

#include <algorithm>
#include <cmath>

#include "uqd/errors.hpp"
#include "uqd/povm.hpp"
#include "uqd/spectral.hpp"

namespace uqd {

namespace {

constexpr double kBoundarySlack = 1e-12;

double projective_scale(int n) { return n / (2.0 * (n + 1.0)); }

}  // namespace

void DiscriminatorConfig::validate() const {
  require_copy_count(n);
  require_prior(eta1);
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::VonNeumann2:
      return "vn2";
    case Regime::Povm:
      return "povm";
    case Regime::VonNeumann1:
      return "vn1";
  }
  return "?";
}

Regime regime_from_string(const std::string& tag) {
  if (tag == "vn2") return Regime::VonNeumann2;
  if (tag == "povm") return Regime::Povm;
  if (tag == "vn1") return Regime::VonNeumann1;
  throw DomainError("unknown regime tag '" + tag + "'");
}

PriorInterval validity_range(int n) {
  require_copy_count(n);
  const double a = static_cast<double>(n) * n;
  const double b = (n + 1.0) * (n + 1.0);
  return {a / (a + b), b / (a + b)};
}

std::pair<double, double> optimal_c(int n, double eta1) {
  const PriorInterval range = validity_range(n);
  if (!(eta1 >= range.lo - kBoundarySlack && eta1 <= range.hi + kBoundarySlack)) {
    throw DomainError("optimal_c: eta1 outside the POVM validity range");
  }
  const double np1 = n + 1.0;
  const double scale = np1 * np1 / (2.0 * n + 1.0);
  const double ratio = n / np1;
  const double c1 = scale * (1.0 - ratio * std::sqrt((1.0 - eta1) / eta1));
  const double c2 = scale * (1.0 - ratio * std::sqrt(eta1 / (1.0 - eta1)));
  return {std::clamp(c1, 0.0, 1.0), std::clamp(c2, 0.0, 1.0)};
}

double avg_success_povm(int n, double eta1) {
  require_copy_count(n);
  require_prior(eta1);
  return n / (4.0 * n + 2.0) * (n + 1.0 - 2.0 * n * std::sqrt(eta1 * (1.0 - eta1)));
}

double avg_success_projective(int n, double eta1, int which) {
  require_copy_count(n);
  require_prior(eta1);
  if (which != 1 && which != 2) throw DomainError("projective branch must be 1 or 2");
  return (which == 1 ? eta1 : 1.0 - eta1) * projective_scale(n);
}

double avg_success_linear(int n, double eta1, double c1, double c2) {
  require_copy_count(n);
  return total_success(c1, c2, eta1) * projective_scale(n);
}

double avg_success_expression(int n, double eta1, double c1) {
  return avg_success_linear(n, eta1, c1, constraint_c2(c1, n));
}

StrategyDecision decide(const DiscriminatorConfig& config) {
  config.validate();
  const int n = config.n;
  const double eta1 = config.eta1;
  const PriorInterval range = validity_range(n);

  // Priors within rounding of an endpoint take the POVM branch; both agree there.
  if (eta1 < range.lo - kBoundarySlack) {
    return {n, eta1, Regime::VonNeumann2, 0.0, 1.0, avg_success_projective(n, eta1, 2)};
  }
  if (eta1 > range.hi + kBoundarySlack) {
    return {n, eta1, Regime::VonNeumann1, 1.0, 0.0, avg_success_projective(n, eta1, 1)};
  }
  const auto [c1, c2] = optimal_c(n, eta1);
  return {n, eta1, Regime::Povm, c1, c2, avg_success_povm(n, eta1)};
}

double numeric_optimal_c1(int n, double eta1, double tolerance) {
  require_copy_count(n);
  require_prior(eta1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = avg_success_expression(n, eta1, x1);
  double f2 = avg_success_expression(n, eta1, x2);
  while (b - a > tolerance) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = avg_success_expression(n, eta1, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = avg_success_expression(n, eta1, x1);
    }
  }
  return (a + b) / 2.0;
}

}  // namespace uqd
