#include "deuteron/cli.hpp"

#include "deuteron/coordinate.hpp"
#include "deuteron/fitting.hpp"
#include "deuteron/momentum.hpp"
#include "deuteron/observables.hpp"
#include "deuteron/quadrature.hpp"
#include "deuteron/serialization.hpp"
#include "deuteron/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace deuteron::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_row(const char* label, double value, const char* unit) {
  char buf[96];
  if (*unit == '\0') {
    std::snprintf(buf, sizeof buf, "  %-8s %16.9f\n", label, value);
  } else {
    std::snprintf(buf, sizeof buf, "  %-8s %16.9f  %s\n", label, value, unit);
  }
  return buf;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw IoError("cannot write " + *path);
  file << text;
  if (!file) throw IoError("write failed for " + *path);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    cells.push_back(cell);
  }
  return cells;
}

void add_param_options(CLI::App& cmd, ParamInputs& p) {
  cmd.add_option("--params-json", p.params_json, "JSON file with b1_fm, b2_fm, alpha_inv_fm, A, B");
  cmd.add_option("--b", p.b, "equal range parameter b1 = b2 (fm)");
  cmd.add_option("--b1", p.b1, "range parameter b1 (fm)");
  cmd.add_option("--b2", p.b2, "range parameter b2 (fm)");
  cmd.add_option("--alpha", p.alpha, "alpha (fm^-1)");
  cmd.add_option("--A", p.A, "S-state normalisation (fm^-1/2)");
  cmd.add_option("--B", p.B, "D-state normalisation (fm^-1/2)");
  cmd.add_option("--ratio", p.ratio, "B^2/A^2; A and B are solved from P_S + P_D = 1");
}

void add_format_options(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--format", config.format, "stdout format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"table", OutputFormat::Table},
                                              {"json", OutputFormat::Json}},
          CLI::ignore_case));
  cmd.add_option("--output,-o", config.output, "write the JSON/CSV result to this file");
}

int cmd_observables(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ModelParams params = resolve_params(config.params);
  const ObservablesReport rep = report(params);
  const nlohmann::json j = observables_to_json(rep, params);
  for (const std::string& w : rep.warnings) err << "warning: " << w << '\n';

  if (config.format == OutputFormat::Json) {
    emit(j.dump(2) + "\n", config.output, out);
    return kOk;
  }
  std::string table;
  table += "deuteron observables (b1 = " + fmt_number(params.b1()) + " fm, b2 = " +
           fmt_number(params.b2()) + " fm, alpha = " + fmt_number(params.alpha()) + " fm^-1)\n";
  table += fmt_row("A", params.A(), "fm^-1/2");
  table += fmt_row("B", params.B(), "fm^-1/2");
  table += fmt_row("P_S", rep.P_S, std::string("(" + std::string(to_string(rep.path)) + ")").c_str());
  table += fmt_row("P_D", rep.P_D, std::string("(" + std::string(to_string(rep.path)) + ")").c_str());
  table += fmt_row("A_S", rep.A_S, "fm^-1/2");
  table += fmt_row("A_D", rep.A_D, "fm^-1/2");
  table += fmt_row("eta", rep.eta, "");
  table += fmt_row("r_rms", rep.r_rms, "fm");
  table += fmt_row("Q", rep.Q, "fm^2");
  out << table;
  if (config.output) emit(j.dump(2) + "\n", config.output, out);
  return kOk;
}

int cmd_wavefunctions(const RunConfig& config, std::ostream& out) {
  const ModelParams params = resolve_params(config.params);
  const std::vector<double> grid = make_grid(config.grid);
  std::optional<Overlay> overlay;
  if (config.overlay) overlay = read_overlay(*config.overlay);
  emit(wavefunction_csv(params, grid, overlay ? &*overlay : nullptr), config.output, out);
  return kOk;
}

int cmd_momentum(const RunConfig& config, std::ostream& out) {
  const ModelParams params = resolve_params(config.params);
  emit(momentum_csv(params, make_grid(config.grid)), config.output, out);
  return kOk;
}

int cmd_fit(const RunConfig& config, const FitTargets& targets, const FitStart& start,
            std::ostream& out, std::ostream& err) {
  const double alpha = config.params.alpha.value_or(kDefaultAlpha);
  const FitResult fit = fit_parameters(targets, alpha, start);
  emit(fit_to_json(fit, targets, alpha).dump(2) + "\n", config.output, out);
  if (!fit.converged) {
    err << "fit did not converge; best residual norm " << fmt_number(fit.residual_norm) << '\n';
    return kFitNotConverged;
  }
  return kOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const ModelParams params = resolve_params(config.params);
  const ValidationReport rep = run_validation(params, config.validation);
  if (config.format == OutputFormat::Json) {
    emit(validation_to_json(rep, params).dump(2) + "\n", config.output, out);
  } else {
    std::string text;
    for (const CheckResult& c : rep.checks) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s  %-52s measured %.3e  tol %.1e\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
      text += buf;
    }
    text += rep.all_passed() ? "all checks passed\n" : "some checks FAILED\n";
    out << text;
    if (config.output) emit(validation_to_json(rep, params).dump(2) + "\n", config.output, out);
  }
  return rep.all_passed() ? kOk : kChecksFailed;
}

}  // namespace

ModelParams resolve_params(const ParamInputs& inputs) {
  double b1 = kDefaultRange;
  double b2 = kDefaultRange;
  double alpha = kDefaultAlpha;
  std::optional<double> A;
  std::optional<double> B;
  std::optional<double> ratio;

  if (inputs.params_json) {
    const nlohmann::json j = read_json_file(*inputs.params_json);
    auto get = [&](const char* key) -> std::optional<double> {
      if (!j.contains(key)) return std::nullopt;
      if (!j.at(key).is_number()) throw ValidationError({std::string("key ") + key + " is not a number"});
      return j.at(key).get<double>();
    };
    b1 = get("b1_fm").value_or(b1);
    b2 = get("b2_fm").value_or(b2);
    alpha = get("alpha_inv_fm").value_or(alpha);
    A = get("A");
    B = get("B");
    ratio = get("ratio");
  }
  if (inputs.b) b1 = b2 = *inputs.b;
  if (inputs.b1) b1 = *inputs.b1;
  if (inputs.b2) b2 = *inputs.b2;
  if (inputs.alpha) alpha = *inputs.alpha;
  if (inputs.A) A = inputs.A;
  if (inputs.B) B = inputs.B;

  if (inputs.ratio) return solve_normalisation(b1, b2, alpha, *inputs.ratio);
  if (A && B) return make_params(b1, b2, alpha, *A, *B);
  if (A || B) throw ValidationError({"A and B must be given together (or use --ratio)"});
  return solve_normalisation(b1, b2, alpha, ratio.value_or(kDefaultRatio));
}

std::vector<double> make_grid(const GridSpec& grid) {
  std::vector<std::string> problems;
  if (!(grid.step > 0.0) || !std::isfinite(grid.step)) problems.emplace_back("grid step must be > 0");
  if (!(grid.min >= 0.0) || !std::isfinite(grid.min)) problems.emplace_back("grid minimum must be >= 0");
  if (!(grid.max > grid.min) || !std::isfinite(grid.max)) {
    problems.emplace_back("grid maximum must exceed the minimum");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  const auto count = static_cast<long>(std::floor((grid.max - grid.min) / grid.step * (1.0 + 1e-12) + 1e-6));
  std::vector<double> out;
  out.reserve(count + 1);
  for (long i = 0; i <= count; ++i) out.push_back(grid.min + i * grid.step);
  return out;
}

Overlay read_overlay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open overlay " + path);
  Overlay overlay;
  std::string line;
  if (!std::getline(in, line)) throw IoError("overlay " + path + " is empty");
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2) throw IoError("overlay " + path + " needs an r column and at least one value column");
  overlay.columns.assign(header.begin() + 1, header.end());
  std::vector<std::pair<double, std::vector<double>>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw IoError("overlay " + path + ": wrong column count on line " + std::to_string(line_no));
    }
    std::vector<double> values;
    try {
      for (const std::string& c : cells) values.push_back(std::stod(c));
    } catch (const std::exception&) {
      throw IoError("overlay " + path + ": non-numeric value on line " + std::to_string(line_no));
    }
    const double r = values.front();
    values.erase(values.begin());
    rows.emplace_back(r, std::move(values));
  }
  if (rows.empty()) throw IoError("overlay " + path + " has no data rows");
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [r, v] : rows) {
    overlay.r.push_back(r);
    overlay.rows.push_back(std::move(v));
  }
  return overlay;
}

std::string wavefunction_csv(const ModelParams& params, const std::vector<double>& r_grid,
                             const Overlay* overlay) {
  std::string csv = "r_fm,u,w,region";
  if (overlay) {
    for (const std::string& c : overlay->columns) csv += ",ref_" + c;
  }
  csv += '\n';
  for (double r : r_grid) {
    const RadialSample s = sample_radial(r, params);
    csv += fmt_number(r) + ',' + fmt_number(s.u) + ',' + fmt_number(s.w) + ',' +
           std::string(to_string(s.region));
    if (overlay) {
      // nearest reference r; ties go to the smaller r
      const auto it = std::lower_bound(overlay->r.begin(), overlay->r.end(), r);
      std::size_t idx = static_cast<std::size_t>(it - overlay->r.begin());
      if (idx == overlay->r.size() || (idx > 0 && r - overlay->r[idx - 1] <= overlay->r[idx] - r)) --idx;
      for (double v : overlay->rows[idx]) csv += ',' + fmt_number(v);
    }
    csv += '\n';
  }
  return csv;
}

std::string momentum_csv(const ModelParams& params, const std::vector<double>& k_grid) {
  std::string csv = "k_inv_fm,g_C,g_T,u_k,w_k\n";
  for (double k : k_grid) {
    csv += fmt_number(k) + ',' + fmt_number(form_factor_central(k, params)) + ',' +
           fmt_number(form_factor_tensor(k, params)) + ',' + fmt_number(u_momentum(k, params)) +
           ',' + fmt_number(w_momentum(k, params)) + '\n';
  }
  return csv;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separable-potential deuteron model with spherical Bessel form factors", "deuteron"};
  app.require_subcommand(1);

  RunConfig config;
  FitTargets targets{2.08, 0.286};
  FitStart start{1.2, 2.0};

  CLI::App* observables = app.add_subcommand("observables", "P_S, P_D, A_S, A_D, eta, r_rms, Q");
  add_param_options(*observables, config.params);
  add_format_options(*observables, config);

  CLI::App* wavefunctions = app.add_subcommand("wavefunctions", "CSV table of u(r), w(r)");
  add_param_options(*wavefunctions, config.params);
  wavefunctions->add_option("--r-min", config.grid.min, "first radius (fm)");
  wavefunctions->add_option("--r-max", config.grid.max, "last radius (fm)");
  wavefunctions->add_option("--step", config.grid.step, "radial step (fm)");
  wavefunctions->add_option("--overlay", config.overlay, "reference CSV (r first) merged by nearest r");
  wavefunctions->add_option("--output,-o", config.output, "CSV output file");

  CLI::App* momentum = app.add_subcommand("momentum", "CSV table of form factors and u(k), w(k)");
  add_param_options(*momentum, config.params);
  momentum->add_option("--k-min", config.grid.min, "first momentum (fm^-1)");
  momentum->add_option("--k-max", config.grid.max, "last momentum (fm^-1)");
  momentum->add_option("--step", config.grid.step, "momentum step (fm^-1)");
  momentum->add_option("--output,-o", config.output, "CSV output file");

  CLI::App* fit = app.add_subcommand("fit", "fit b and B^2/A^2 to r_rms and Q (equal ranges)");
  fit->add_option("--r-rms-target", targets.r_rms_target, "target rms radius (fm)");
  fit->add_option("--q-target", targets.Q_target, "target quadrupole moment (fm^2)");
  fit->add_option("--alpha", config.params.alpha, "alpha (fm^-1)");
  fit->add_option("--b0", start.b, "initial b (fm)");
  fit->add_option("--ratio0", start.ratio, "initial B^2/A^2");
  fit->add_option("--output,-o", config.output, "JSON output file");

  CLI::App* validate = app.add_subcommand("validate", "continuity, transform, Parseval and probability checks");
  add_param_options(*validate, config.params);
  add_format_options(*validate, config);
  validate->add_option("--tol-value", config.validation.value_tolerance, "branch value agreement");
  validate->add_option("--tol-derivative", config.validation.derivative_tolerance, "derivative agreement");
  validate->add_option("--tol-transform", config.validation.transform_tolerance, "transform oracle (absolute)");
  validate->add_option("--tol-parseval", config.validation.parseval_tolerance, "Parseval (absolute)");
  validate->add_option("--fault-scale-middle-w", config.validation.middle_w_fault_scale,
                       "test hook: multiply the middle-region w branch")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*observables) return cmd_observables(config, out, err);
    if (*wavefunctions) return cmd_wavefunctions(config, out);
    if (*momentum) {
      if (momentum->count("--k-max") == 0) config.grid.max = 10.0;
      return cmd_momentum(config, out);
    }
    if (*fit) return cmd_fit(config, targets, start, out, err);
    if (*validate) return cmd_validate(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("deuteron");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace deuteron::cli
