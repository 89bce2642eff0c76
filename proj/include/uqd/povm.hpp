#pragma once

#include "uqd/symmetric_core.hpp"

namespace uqd {

/// Scale factors of the two conclusive elements, each in [0, 1].
class PovmParams {
 public:
  PovmParams(double c1, double c2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c(Hypothesis which) const { return which == Hypothesis::First ? c1_ : c2_; }

  bool operator==(const PovmParams&) const = default;

 private:
  double c1_;
  double c2_;
};

// Projector block whose complement identifies `which`.
inline SymmetricBlock detecting_block(Hypothesis which) {
  return which == Hypothesis::First ? SymmetricBlock::EvenTail : SymmetricBlock::OddTail;
}

/// Pi1 = c1 (I - P_{E,T}) (x) I_O, Pi2 = c2 (I - P_{O,T}) (x) I_E and the
/// failure element Pi0 = I - Pi1 - Pi2.
struct PovmTriple {
  int n;
  PovmParams params;
  ReducedOperator pi1;
  ReducedOperator pi2;
  ReducedOperator pi0;

  const ReducedOperator& element(Hypothesis which) const {
    return which == Hypothesis::First ? pi1 : pi2;
  }
};

PovmTriple build_povm(int n, const PovmParams& params);

// <Psi| Pi_which |Psi>.
double success_probability(const ReducedState& state, const PovmTriple& triple,
                           Hypothesis which);

// <Psi_i| P_{R,T} (x) I_S |Psi_i> from the double-sum closed form, where the
// R block holds n copies of psi_j (j the other hypothesis) and the tail holds
// psi_i. Valid for any n >= 1.
double closed_form_expectation(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                               Hypothesis which);

// c_i (1 - closed_form_expectation); no operator is built.
double closed_form_success(const BlochQubit& psi1, const BlochQubit& psi2, int n,
                           const PovmParams& params, Hypothesis which);

// max(<Psi1|Pi2|Psi1>, <Psi2|Pi1|Psi2>).
double no_error_check(const PovmTriple& triple, const BlochQubit& psi1, const BlochQubit& psi2);

// eta1 p1 + (1 - eta1) p2.
double total_success(double p1, double p2, double eta1);

// Throws DomainError unless 0 <= eta1 <= 1.
void require_prior(double eta1);

}  // namespace uqd
