#pragma once

#include "deuteron/fitting.hpp"
#include "deuteron/model.hpp"
#include "deuteron/observables.hpp"
#include "deuteron/validation.hpp"

#include <json.hpp>

// JSON schemas. Keys carry their units:
//   params:      b1_fm, b2_fm, alpha_inv_fm, A, B   (A, B in fm^-1/2)
//   observables: P_S, P_D, A_S_inv_sqrt_fm, A_D_inv_sqrt_fm, eta, r_rms_fm, Q_fm2, ...
//   fit:         b_fm, ratio, A, B, r_rms_fm, Q_fm2, residual_*, iterations, converged, ...

namespace deuteron {

nlohmann::json params_to_json(const ModelParams& params);
// Requires every params key; throws ValidationError on missing or invalid values.
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json observables_to_json(const ObservablesReport& report, const ModelParams& params);
nlohmann::json fit_to_json(const FitResult& fit, const FitTargets& targets, double alpha);
nlohmann::json validation_to_json(const ValidationReport& report, const ModelParams& params);

}  // namespace deuteron
