#include "uqd/symmetric_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uqd/errors.hpp"

namespace uqd {

void require_copy_count(int n) {
  if (n < 1) throw DomainError("copy count must be >= 1, got " + std::to_string(n));
}

void require_dense_reduced(int n) {
  require_copy_count(n);
  if (n > kDenseReducedMax) {
    throw ResourceError("dense reduced operators limited to n <= " +
                        std::to_string(kDenseReducedMax) + ", got " + std::to_string(n));
  }
}

BlochQubit::BlochQubit(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  constexpr double two_pi = 2.0 * kPi;
  phi_ = std::fmod(phi, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

Eigen::Vector2cd BlochQubit::amplitudes() const {
  return {Complex(std::cos(theta_ / 2.0), 0.0), std::polar(std::sin(theta_ / 2.0), phi_)};
}

int flat_index(int n, ReducedIndex idx) { return idx.l * 2 * (n + 1) + idx.m * 2 + idx.t; }

ReducedIndex reduced_index(int n, int flat) {
  const int stride = 2 * (n + 1);
  return {flat / stride, (flat % stride) / 2, flat % 2};
}

ReducedState::ReducedState(int n, Eigen::VectorXcd amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  require_copy_count(n);
  if (amplitudes_.size() != reduced_dimension(n)) {
    throw UsageError("reduced state length does not match 2(n+1)^2");
  }
}

ReducedOperator::ReducedOperator(int n, Eigen::MatrixXcd entries)
    : n_(n), entries_(std::move(entries)) {
  require_copy_count(n);
  const int d = reduced_dimension(n);
  if (entries_.rows() != d || entries_.cols() != d) {
    throw UsageError("reduced operator shape does not match 2(n+1)^2");
  }
}

ReducedOperator ReducedOperator::identity(int n) {
  require_dense_reduced(n);
  const int d = reduced_dimension(n);
  return {n, Eigen::MatrixXcd::Identity(d, d)};
}

double ReducedOperator::expectation(const ReducedState& psi) const {
  if (psi.n() != n_) throw UsageError("state and operator built for different n");
  return psi.amplitudes().dot(entries_ * psi.amplitudes()).real();
}

double ReducedOperator::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

ReducedOperator operator+(const ReducedOperator& a, const ReducedOperator& b) {
  if (a.n() != b.n()) throw UsageError("operators built for different n");
  return {a.n(), a.entries() + b.entries()};
}

ReducedOperator operator-(const ReducedOperator& a, const ReducedOperator& b) {
  if (a.n() != b.n()) throw UsageError("operators built for different n");
  return {a.n(), a.entries() - b.entries()};
}

ReducedOperator operator*(double s, const ReducedOperator& a) { return {a.n(), s * a.entries()}; }

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") out of range");
  }
  if (n > kExactBinomialMax) {
    throw DomainError("exact binomial limited to n <= " + std::to_string(kExactBinomialMax));
  }
  k = std::min(k, n - k);
  __extension__ unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("log_binomial argument out of range");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial_real(int n, int k) {
  if (n <= kExactBinomialMax) return static_cast<double>(binomial(n, k));
  return std::exp(log_binomial(n, k));
}

namespace {

// exponent * log(x) with 0 * log(0) taken as 0.
double scaled_log(int exponent, double x) {
  if (exponent == 0) return 0.0;
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return exponent * std::log(x);
}

}  // namespace

Eigen::VectorXcd dicke_amplitudes(const BlochQubit& q, int n) {
  require_copy_count(n);
  const double c = std::cos(q.theta() / 2.0);
  const double s = std::sin(q.theta() / 2.0);
  Eigen::VectorXcd out(n + 1);
  for (int k = 0; k <= n; ++k) {
    double magnitude;
    if (n <= kExactBinomialMax) {
      magnitude = std::pow(c, n - k) * std::pow(s, k) * std::sqrt(binomial_real(n, k));
    } else {
      magnitude =
          std::exp(scaled_log(n - k, c) + scaled_log(k, s) + 0.5 * log_binomial(n, k));
    }
    out(k) = std::polar(magnitude, k * q.phi());
  }
  return out;
}

ReducedState build_input_state(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                               Hypothesis which) {
  require_copy_count(n);
  const Eigen::VectorXcd odd = dicke_amplitudes(psi1, n);
  const Eigen::VectorXcd even = dicke_amplitudes(psi2, n);
  const Eigen::Vector2cd tail = (which == Hypothesis::First ? psi1 : psi2).amplitudes();

  Eigen::VectorXcd amps(reduced_dimension(n));
  for (int l = 0; l <= n; ++l) {
    for (int m = 0; m <= n; ++m) {
      for (int t = 0; t < 2; ++t) {
        amps(flat_index(n, {l, m, t})) = odd(l) * even(m) * tail(t);
      }
    }
  }
  return {n, std::move(amps)};
}

TailSplit tail_split(int n, int k) {
  require_copy_count(n);
  if (k < 0 || k > n + 1) throw DomainError("tail_split: k must lie in 0..n+1");
  // C(n,k)/C(n+1,k) = (n+1-k)/(n+1) and C(n,k-1)/C(n+1,k) = k/(n+1).
  const double denom = n + 1.0;
  return {std::sqrt((n + 1 - k) / denom), std::sqrt(k / denom)};
}

ReducedOperator build_symmetric_projector(int n, SymmetricBlock block) {
  require_dense_reduced(n);
  const int d = reduced_dimension(n);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);

  // (spectator, symmetric-block count, tail) -> flat index
  auto index = [&](int spectator, int r, int t) {
    return block == SymmetricBlock::EvenTail ? flat_index(n, {spectator, r, t})
                                             : flat_index(n, {r, spectator, t});
  };

  for (int spectator = 0; spectator <= n; ++spectator) {
    for (int k = 0; k <= n + 1; ++k) {
      const TailSplit w = tail_split(n, k);
      // Dicke state |e_k>_{R,T} as at most two nonzero components.
      int idx[2];
      double val[2];
      int count = 0;
      if (k <= n) {
        idx[count] = index(spectator, k, 0);
        val[count++] = w.stay;
      }
      if (k >= 1) {
        idx[count] = index(spectator, k - 1, 1);
        val[count++] = w.move;
      }
      for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) p(idx[a], idx[b]) += val[a] * val[b];
      }
    }
  }
  return {n, std::move(p)};
}

}  // namespace uqd
