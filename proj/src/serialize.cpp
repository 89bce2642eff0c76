#include "uqd/serialize.hpp"

namespace uqd {

void to_json(nlohmann::json& j, const StrategyDecision& d) {
  j = nlohmann::json{{"n", d.n},   {"eta1", d.eta1}, {"regime", to_string(d.regime)},
                     {"c1", d.c1}, {"c2", d.c2},     {"avg_success", d.avg_success}};
}

void from_json(const nlohmann::json& j, StrategyDecision& d) {
  j.at("n").get_to(d.n);
  j.at("eta1").get_to(d.eta1);
  d.regime = regime_from_string(j.at("regime").get<std::string>());
  j.at("c1").get_to(d.c1);
  j.at("c2").get_to(d.c2);
  j.at("avg_success").get_to(d.avg_success);
}

void to_json(nlohmann::json& j, const SpectrumReport& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& b : r.blocks) {
    blocks.push_back(
        {{"label", to_string(b.label)}, {"l", b.l}, {"size", b.size()}, {"eigenvalues", b.eigenvalues}});
  }
  j = nlohmann::json{{"n", r.n},
                     {"c1", r.params.c1()},
                     {"c2", r.params.c2()},
                     {"blocks", std::move(blocks)},
                     {"min_eigenvalue", r.min_eigenvalue},
                     {"closed_form_min", r.closed_form_min},
                     {"feasible", r.feasible}};
}

void to_json(nlohmann::json& j, const McReport& r) {
  j = nlohmann::json{{"samples", r.samples},     {"mean_success", r.mean_success},
                     {"std_error", r.std_error}, {"analytic", r.analytic},
                     {"error_events", r.error_events}};
}

void from_json(const nlohmann::json& j, McReport& r) {
  j.at("samples").get_to(r.samples);
  j.at("mean_success").get_to(r.mean_success);
  j.at("std_error").get_to(r.std_error);
  j.at("analytic").get_to(r.analytic);
  j.at("error_events").get_to(r.error_events);
}

void to_json(nlohmann::json& j, const OutcomeCounts& c) {
  j = nlohmann::json{{"identify1", c.identify1}, {"identify2", c.identify2}, {"fail", c.fail},
                     {"shots", c.shots},         {"error_events", c.error_events}};
}

void from_json(const nlohmann::json& j, OutcomeCounts& c) {
  j.at("identify1").get_to(c.identify1);
  j.at("identify2").get_to(c.identify2);
  j.at("fail").get_to(c.fail);
  j.at("shots").get_to(c.shots);
  j.at("error_events").get_to(c.error_events);
}

}  // namespace uqd
