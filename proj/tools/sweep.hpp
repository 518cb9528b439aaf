#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedgecp::cli {

enum class Command { potential, force };
enum class Regime { full, nr_wall, r_wall, cp };
enum class Format { csv, json };

/// Thrown for any invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed value "V", a linear range "MIN:MAX:STEPS", or a logarithmic range
/// "logMIN:MAX:STEPS".
struct RangeSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
  bool log = false;

  static RangeSpec parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct SweepConfig {
  std::string atom_source = "unit";
  std::vector<int> q{1};
  RangeSpec phi{};
  bool phi_fraction = false;  ///< phi values are fractions of pi/q
  RangeSpec rho{};
  Regime regime = Regime::full;
  Format format = Format::csv;
  std::string output = "-";
  int threads = 1;
  bool phi_set = false;
  bool rho_set = false;

  /// Applies one key=value setting. Keys: atom, q, phi, phi_mode, rho,
  /// regime, format, out, threads.
  void set(const std::string& key, const std::string& value);

  /// Throws ConfigError if the grid leaves the open domain.
  void validate() const;
};

/// key=value lines; '#' comments and blank lines ignored.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Built-in figure presets "fig2", "fig3", "fig4" as key=value maps.
std::optional<std::map<std::string, std::string>> preset(const std::string& name);

struct SweepOutcome {
  int boundary_rows = 0;
  int total_rows = 0;
};

/// Evaluates the grid (q outer, rho, phi inner) on config.threads workers and
/// writes the dataset in deterministic order.
SweepOutcome run_sweep(Command command, const SweepConfig& config,
                       std::ostream& out);

std::string to_string(Regime regime);

}  // namespace wedgecp::cli
