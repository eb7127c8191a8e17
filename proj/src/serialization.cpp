#include "deuteron/serialization.hpp"

namespace deuteron {

using nlohmann::json;

json params_to_json(const ModelParams& params) {
  return json{{"b1_fm", params.b1()},
              {"b2_fm", params.b2()},
              {"alpha_inv_fm", params.alpha()},
              {"A", params.A()},
              {"B", params.B()}};
}

ModelParams params_from_json(const json& j) {
  std::vector<std::string> problems;
  auto read = [&](const char* key) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing key ") + key);
      return 0.0;
    }
    if (!j.at(key).is_number()) {
      problems.push_back(std::string("key ") + key + " is not a number");
      return 0.0;
    }
    return j.at(key).get<double>();
  };
  const double b1 = read("b1_fm");
  const double b2 = read("b2_fm");
  const double alpha = read("alpha_inv_fm");
  const double A = read("A");
  const double B = read("B");
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return make_params(b1, b2, alpha, A, B);
}

json observables_to_json(const ObservablesReport& report, const ModelParams& params) {
  return json{{"params", params_to_json(params)},
              {"P_S", report.P_S},
              {"P_D", report.P_D},
              {"normalisation_sum", report.P_S + report.P_D},
              {"probability_path", std::string(to_string(report.path))},
              {"A_S_inv_sqrt_fm", report.A_S},
              {"A_D_inv_sqrt_fm", report.A_D},
              {"eta", report.eta},
              {"r_rms_fm", report.r_rms},
              {"Q_fm2", report.Q},
              {"warnings", report.warnings}};
}

json fit_to_json(const FitResult& fit, const FitTargets& targets, double alpha) {
  json history = json::array();
  for (const FitIteration& it : fit.history) {
    history.push_back({{"iteration", it.iteration},
                       {"b_fm", it.b},
                       {"ratio", it.ratio},
                       {"residual_norm", it.residual_norm},
                       {"step_scale", it.step_scale}});
  }
  return json{{"targets", {{"r_rms_fm", targets.r_rms_target}, {"Q_fm2", targets.Q_target}}},
              {"alpha_inv_fm", alpha},
              {"b_fm", fit.b},
              {"ratio", fit.ratio},
              {"A", fit.A},
              {"B", fit.B},
              {"r_rms_fm", fit.r_rms},
              {"Q_fm2", fit.Q},
              {"residual_r_rms_fm", fit.residual_r_rms},
              {"residual_Q_fm2", fit.residual_Q},
              {"residual_norm", fit.residual_norm},
              {"iterations", fit.iterations},
              {"converged", fit.converged},
              {"used_grid_scan", fit.used_grid_scan},
              {"history", history}};
}

json validation_to_json(const ValidationReport& report, const ModelParams& params) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  return json{{"params", params_to_json(params)},
              {"all_passed", report.all_passed()},
              {"checks", checks}};
}

}  // namespace deuteron
