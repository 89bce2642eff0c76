#pragma once

// Dicke-basis bookkeeping for registers made of n copies of psi1 (odd
// positions), n copies of psi2 (even positions) and one tail qubit.
//
// Because each register is invariant under permutations inside the odd
// block and inside the even block, every state and operator we need lives in
// the reduced space spanned by |e_l>_O |e_m>_E |t>_T with l, m in 0..n and
// t in {0, 1}; its dimension is 2(n+1)^2.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace uqd {

using Complex = std::complex<double>;

// Largest n for which binomial() is exact.
inline constexpr int kExactBinomialMax = 60;
// Largest n for which dense reduced operators are built (dimension 2048).
inline constexpr int kDenseReducedMax = 31;

// Throws DomainError unless n >= 1.
void require_copy_count(int n);
// Also throws ResourceError above kDenseReducedMax.
void require_dense_reduced(int n);

enum class Hypothesis { First = 1, Second = 2 };

inline Hypothesis other(Hypothesis h) {
  return h == Hypothesis::First ? Hypothesis::Second : Hypothesis::First;
}

// Which n+1 positions a symmetric projector acts on. EvenTail pairs with
// the first hypothesis, OddTail with the second.
enum class SymmetricBlock { EvenTail, OddTail };

/// Pure qubit cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
class BlochQubit {
 public:
  // theta must lie in [0, pi]; phi is wrapped into [0, 2 pi).
  BlochQubit(double theta, double phi);

  static BlochQubit zero() { return {0.0, 0.0}; }
  static BlochQubit one() { return {kPi, 0.0}; }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  // Amplitudes on |0> and |1>.
  Eigen::Vector2cd amplitudes() const;

  bool operator==(const BlochQubit&) const = default;

  static constexpr double kPi = 3.14159265358979323846;

 private:
  double theta_;
  double phi_;
};

struct ReducedIndex {
  int l;  // odd-block excitation count
  int m;  // even-block excitation count
  int t;  // tail bit

  bool operator==(const ReducedIndex&) const = default;
};

inline int reduced_dimension(int n) { return 2 * (n + 1) * (n + 1); }

// Flat ordering: index = l * 2(n+1) + m * 2 + t.
int flat_index(int n, ReducedIndex idx);
ReducedIndex reduced_index(int n, int flat);

class ReducedState {
 public:
  ReducedState(int n, Eigen::VectorXcd amplitudes);

  int n() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](ReducedIndex idx) const { return amplitudes_(flat_index(n_, idx)); }

 private:
  int n_;
  Eigen::VectorXcd amplitudes_;
};

class ReducedOperator {
 public:
  ReducedOperator(int n, Eigen::MatrixXcd entries);

  static ReducedOperator identity(int n);

  int n() const { return n_; }
  int dimension() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  // <psi| A |psi>, real part. Throws UsageError on an n mismatch.
  double expectation(const ReducedState& psi) const;

  // max |A - A^dagger| entrywise.
  double hermiticity_defect() const;

 private:
  int n_;
  Eigen::MatrixXcd entries_;
};

ReducedOperator operator+(const ReducedOperator& a, const ReducedOperator& b);
ReducedOperator operator-(const ReducedOperator& a, const ReducedOperator& b);
ReducedOperator operator*(double s, const ReducedOperator& a);

// Exact C(n, k) for 0 <= k <= n <= 60. DomainError otherwise.
std::uint64_t binomial(int n, int k);

// log C(n, k) for any 0 <= k <= n.
double log_binomial(int n, int k);

// C(n, k) as a double: exact below the 60 cap, log-space above it.
double binomial_real(int n, int k);

// Components cos^{n-k}(theta/2) sin^k(theta/2) e^{i k phi} sqrt(C(n,k)) of
// q^{(x) n} on the Dicke states |e_0> .. |e_n>.
Eigen::VectorXcd dicke_amplitudes(const BlochQubit& q, int n);

// Register with psi1 on odd positions, psi2 on even positions and the tail
// copy taken from psi1 (First) or psi2 (Second).
ReducedState build_input_state(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                               Hypothesis which);

// P_{E,T} (x) I_O or P_{O,T} (x) I_E restricted to the reduced space.
ReducedOperator build_symmetric_projector(int n, SymmetricBlock block);

// Coefficients of |e_k>_{R,T} = a_k |e_k>_R |0>_T + b_k |e_{k-1}>_R |1>_T,
// i.e. a_k = sqrt(C(n,k)/C(n+1,k)) and b_k = sqrt(C(n,k-1)/C(n+1,k)).
struct TailSplit {
  double stay;  // a_k
  double move;  // b_k
};
TailSplit tail_split(int n, int k);

}  // namespace uqd
