#pragma once

#include <casimir/decomposition.hpp>

#include <optional>
#include <string>
#include <vector>

namespace casimir_cli {

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log_spacing = false;

  std::vector<double> points() const;
  std::string str() const;
};

/// Parses "start:stop:count[:log|:lin]".
GridSpec parse_grid(const std::string& text);

/// Staging area for one command invocation. Values are resolved with the
/// precedence: built-in Au defaults < config file < explicit CLI flags.
struct RunConfig {
  std::string model = "drude";  // drude | plasma | tabulated
  double omega_p = casimir::au::plasma_frequency;
  double gamma = casimir::au::relaxation;
  std::string table_path;
  std::string tail = "drude";  // drude | plasma
  double temperature = 300.0;
  std::optional<double> a_single;
  std::optional<GridSpec> a_grid;
  casimir::QuadratureConfig quad;
  std::string out;  // empty -> stdout

  /// Overlay from a JSON config file (unknown keys rejected).
  void apply_config_file(const std::string& path);

  casimir::DielectricModel make_model() const;
  std::vector<double> separations() const;  // defaults to {1e-6} when unset
  std::string describe_grid() const;
};

}  // namespace casimir_cli
