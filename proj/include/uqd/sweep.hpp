#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "uqd/strategy.hpp"

namespace uqd {

struct SweepRow {
  double eta1;
  double p_vn1;
  double p_vn2;
  std::optional<double> p_povm;  // only inside the closed validity range
  double p_opt;
  Regime regime;
};

// `points` priors i / (points - 1), i = 0..points-1. DomainError for points < 2.
std::vector<SweepRow> sweep(int n, int points);

// Header eta1,p_vn1,p_vn2,p_povm,p_opt,regime; 17 significant digits; empty
// p_povm field outside the validity range.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace uqd
