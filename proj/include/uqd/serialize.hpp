#pragma once

#include "json.hpp"
#include "uqd/sampler.hpp"
#include "uqd/spectral.hpp"
#include "uqd/strategy.hpp"

namespace uqd {

// Keys: n, eta1, regime, c1, c2, avg_success.
void to_json(nlohmann::json& j, const StrategyDecision& d);
void from_json(const nlohmann::json& j, StrategyDecision& d);

// Keys: n, c1, c2, blocks[{label, l, size, eigenvalues}], min_eigenvalue,
// closed_form_min, feasible.
void to_json(nlohmann::json& j, const SpectrumReport& r);

void to_json(nlohmann::json& j, const McReport& r);
void from_json(const nlohmann::json& j, McReport& r);

void to_json(nlohmann::json& j, const OutcomeCounts& c);
void from_json(const nlohmann::json& j, OutcomeCounts& c);

}  // namespace uqd
