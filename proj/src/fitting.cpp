#include "deuteron/fitting.hpp"

#include "deuteron/model.hpp"
#include "deuteron/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace deuteron {

namespace {

constexpr double kMinRange = 0.05;  // fm, lower clamp for trial b
constexpr double kMaxRange = 20.0;  // fm

struct Evaluation {
  double b;
  double ratio;
  FitObservables obs;
  std::array<double, 2> residual;  // scaled
  double norm;
};

class Problem {
 public:
  Problem(const FitTargets& targets, double alpha, const FitOptions& options)
      : targets_(targets), alpha_(alpha), options_(options),
        q_scale_(targets.Q_target > 0.0 ? targets.Q_target : 1.0) {}

  Evaluation evaluate(double b, double ratio) const {
    Evaluation e{b, ratio, fit_observables(b, ratio, alpha_, options_.panel_order), {}, 0.0};
    e.residual = {(e.obs.r_rms - targets_.r_rms_target) / targets_.r_rms_target,
                  (e.obs.Q - targets_.Q_target) / q_scale_};
    e.norm = std::hypot(e.residual[0], e.residual[1]);
    return e;
  }

  const FitOptions& options() const { return options_; }

 private:
  FitTargets targets_;
  double alpha_;
  FitOptions options_;
  double q_scale_;
};

double clamp_range(double b) { return std::clamp(b, kMinRange, kMaxRange); }

// Damped Newton from `current`. Returns true on convergence; `best` tracks
// the lowest residual seen.
bool newton(const Problem& problem, Evaluation current, Evaluation& best, FitResult& result) {
  const FitOptions& opt = problem.options();
  if (current.norm < best.norm) best = current;
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (current.norm <= opt.tolerance) return true;
    ++result.iterations;

    const double hb = opt.jacobian_step * current.b;
    const double hr = opt.jacobian_step * std::max(current.ratio, 1.0);
    const Evaluation eb = problem.evaluate(current.b + hb, current.ratio);
    const Evaluation er = problem.evaluate(current.b, current.ratio + hr);
    const double j00 = (eb.residual[0] - current.residual[0]) / hb;
    const double j10 = (eb.residual[1] - current.residual[1]) / hb;
    const double j01 = (er.residual[0] - current.residual[0]) / hr;
    const double j11 = (er.residual[1] - current.residual[1]) / hr;
    const double det = j00 * j11 - j01 * j10;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return false;
    const double db = -(j11 * current.residual[0] - j01 * current.residual[1]) / det;
    const double dr = -(-j10 * current.residual[0] + j00 * current.residual[1]) / det;

    double scale = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving, scale *= 0.5) {
      const double b_trial = clamp_range(current.b + scale * db);
      const double r_trial = std::max(0.0, current.ratio + scale * dr);
      const Evaluation trial = problem.evaluate(b_trial, r_trial);
      if (trial.norm < (1.0 - 1e-4 * scale) * current.norm) {
        current = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) return false;
    if (current.norm < best.norm) best = current;
    result.history.push_back({result.iterations, current.b, current.ratio, current.norm, scale});
  }
  return current.norm <= opt.tolerance;
}

void validate_inputs(const FitTargets& targets, double alpha, const FitStart& initial) {
  std::vector<std::string> problems;
  if (!(targets.r_rms_target > 0.0) || !std::isfinite(targets.r_rms_target)) {
    problems.emplace_back("r_rms target must be > 0");
  }
  if (!(targets.Q_target >= 0.0) || !std::isfinite(targets.Q_target)) {
    problems.emplace_back("Q target must be >= 0");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) problems.emplace_back("alpha must be > 0");
  if (!(initial.b > 0.0) || !std::isfinite(initial.b)) problems.emplace_back("initial b must be > 0");
  if (!(initial.ratio >= 0.0) || !std::isfinite(initial.ratio)) {
    problems.emplace_back("initial ratio must be >= 0");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

}  // namespace

FitObservables fit_observables(double b, double ratio, double alpha, int panel_order) {
  const ModelParams params = solve_normalisation(b, b, alpha, ratio);
  return {rms_radius(params, panel_order), quadrupole_moment(params, panel_order), params.A(),
          params.B()};
}

FitResult fit_parameters(const FitTargets& targets, double alpha, const FitStart& initial,
                         const FitOptions& options) {
  validate_inputs(targets, alpha, initial);
  const Problem problem(targets, alpha, options);
  FitResult result;

  Evaluation best = problem.evaluate(clamp_range(initial.b), initial.ratio);
  bool converged = newton(problem, best, best, result);

  if (!converged) {
    result.used_grid_scan = true;
    Evaluation scan_best = best;
    for (int i = 0; i < options.grid_b_points; ++i) {
      const double b = options.grid_b_min + (options.grid_b_max - options.grid_b_min) * i /
                                                std::max(1, options.grid_b_points - 1);
      for (int j = 0; j < options.grid_ratio_points; ++j) {
        const double ratio = options.grid_ratio_max * j / std::max(1, options.grid_ratio_points - 1);
        const Evaluation e = problem.evaluate(b, ratio);
        if (e.norm < scan_best.norm) scan_best = e;
      }
    }
    if (scan_best.norm < best.norm) best = scan_best;
    converged = newton(problem, scan_best, best, result);
  }

  result.b = best.b;
  result.ratio = best.ratio;
  result.A = best.obs.A;
  result.B = best.obs.B;
  result.r_rms = best.obs.r_rms;
  result.Q = best.obs.Q;
  result.residual_r_rms = best.obs.r_rms - targets.r_rms_target;
  result.residual_Q = best.obs.Q - targets.Q_target;
  result.residual_norm = best.norm;
  result.converged = converged && best.norm <= options.tolerance;
  return result;
}

}  // namespace deuteron
