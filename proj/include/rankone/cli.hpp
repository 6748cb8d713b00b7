#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankone/quadrature.hpp"

namespace rankone::cli {

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct RunConfig {
  std::string preset = "SL2R";
  std::string subcommand;
  std::optional<GridSpec> grid;
  specfun::QuadratureSpec quadrature{};
  std::string format = "csv";
  std::string out;
  /// Radial test function: gaussian, poly_gaussian, sech, xi_weighted.
  std::string profile = "gaussian";
  double profile_s = 1.0;
  double profile_power = 4.0;
  /// Spectral symbols (families names plus odd, rational, rough). Empty
  /// means gauss, except for membership, which then checks the transform of
  /// the profile instead.
  std::string symbol;
  std::string symbol2 = "wide_gauss";
  std::vector<double> lambda{0.5, 1.0, 2.0};
  double lambda_im = 0.0;
  std::vector<double> eps{0.4, 0.2, 0.1};
  double r = 2.0;
  int k = 0;
  double tube_epsilon = 0.0;
  /// Relative error budget for roundtrip.
  double threshold = 1e-6;
  std::vector<std::string> criteria;
};

const std::vector<std::string>& subcommands();

/// Strict parse: unknown keys, wrong types and invalid values throw
/// ValidationError naming the field path (e.g. "config.grid.count").
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
nlohmann::ordered_json config_to_json(const RunConfig& c);
/// "min:max:count".
GridSpec parse_grid(const std::string& text);
void validate(const RunConfig& c);

/// Executes one subcommand, writing the artifact to c.out (atomically) or to
/// `out`. Returns the process exit status: 0 ok, 2 validation or contract
/// failure, 3 accuracy failure, 1 anything else.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main(int argc, char** argv);

}  // namespace rankone::cli
