#include "uqd/sweep.hpp"

#include <cstdio>
#include <string>

#include "uqd/errors.hpp"
#include "uqd/symmetric_core.hpp"

namespace uqd {

std::vector<SweepRow> sweep(int n, int points) {
  require_copy_count(n);
  if (points < 2) throw DomainError("sweep needs at least 2 points");
  const PriorInterval range = validity_range(n);
  std::vector<SweepRow> rows;
  rows.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double eta1 = static_cast<double>(i) / (points - 1);
    const StrategyDecision d = decide({n, eta1});
    std::optional<double> povm;
    if (eta1 >= range.lo && eta1 <= range.hi) povm = avg_success_povm(n, eta1);
    rows.push_back({eta1, avg_success_projective(n, eta1, 1), avg_success_projective(n, eta1, 2),
                    povm, d.avg_success, d.regime});
  }
  return rows;
}

namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "eta1,p_vn1,p_vn2,p_povm,p_opt,regime\n";
  for (const SweepRow& r : rows) {
    out << fmt17(r.eta1) << ',' << fmt17(r.p_vn1) << ',' << fmt17(r.p_vn2) << ','
        << (r.p_povm ? fmt17(*r.p_povm) : std::string()) << ',' << fmt17(r.p_opt) << ','
        << to_string(r.regime) << '\n';
  }
}

}  // namespace uqd
