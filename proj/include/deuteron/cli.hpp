#pragma once

#include "deuteron/model.hpp"
#include "deuteron/validation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace deuteron::cli {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kInvalidInput = 2,
  kNumericalFailure = 3,
  kIoError = 4,
  kFitNotConverged = 5,
};

// Parameter sources. Flags override values read from --params-json. With
// no explicit A and B the normalisation is solved from `ratio` (default 3).
struct ParamInputs {
  std::optional<std::string> params_json;
  std::optional<double> b;  // sets b1 = b2
  std::optional<double> b1;
  std::optional<double> b2;
  std::optional<double> alpha;
  std::optional<double> A;
  std::optional<double> B;
  std::optional<double> ratio;
};

inline constexpr double kDefaultRange = 1.475;   // fm
inline constexpr double kDefaultAlpha = 0.23165;  // fm^-1
inline constexpr double kDefaultRatio = 3.0;

ModelParams resolve_params(const ParamInputs& inputs);

struct GridSpec {
  double min;
  double max;
  double step;
};

// min, min + step, ... up to max (inclusive within step/1e6).
std::vector<double> make_grid(const GridSpec& grid);

enum class OutputFormat { Table, Json };

struct RunConfig {
  ParamInputs params;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> output;
  GridSpec grid{0.0, 12.0, 0.05};
  std::optional<std::string> overlay;
  ValidationOptions validation;
};

// Reference curve read from CSV: header row, first column r.
struct Overlay {
  std::vector<std::string> columns;  // excluding the r column
  std::vector<double> r;
  std::vector<std::vector<double>> rows;
};

Overlay read_overlay(const std::string& path);

// header r_fm,u,w,region (plus ref_* overlay columns)
std::string wavefunction_csv(const ModelParams& params, const std::vector<double>& r_grid,
                             const Overlay* overlay = nullptr);
// header k_inv_fm,g_C,g_T,u_k,w_k
std::string momentum_csv(const ModelParams& params, const std::vector<double>& k_grid);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deuteron::cli
