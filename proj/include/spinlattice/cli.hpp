#pragma once

// Command-line surface. Every command reads flags and, optionally, a flat
// "key = value" config file (# comments); flags win over the file.
//
// Exit status: 0 success, 1 usage error, 2 domain or computation error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spinlattice/cluster.hpp"
#include "spinlattice/units.hpp"

namespace spinlattice::cli {

enum class Command { Optics, DwSpectrum, Transition, Frequencies, Extract, Scan, Counts };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c) noexcept;

// Lattice and trap inputs. Dipole and species fields are optional groups.
struct OpticsArgs {
  double v1 = 0.0;
  double v2 = 1.0;
  double d = 1.0;
  double phase = 0.0;
  double mass = 1.0;
  double wavelength = 1.0;
  double x = 0.0;
  struct Dipole {
    double intensity, alpha, omega, omega0;
  };
  std::optional<Dipole> dipole;
  struct Atom {
    int protons, neutrons, electrons;
  };
  std::optional<Atom> species;
};

// Two-site spectrum at dimensionless u = U/4J, v = V/4J, jex = J_ex/4J.
struct DwSpectrumArgs {
  double u = 0.0;
  double v = 0.0;
  double jex = 0.0;
};

struct TransitionArgs {
  double u = 0.0;
  double v = 0.0;
};

// Raw couplings in energy units.
struct FrequenciesArgs {
  double j = 1.0;
  double u = 0.0;
  double v = 0.0;
  double jex = 0.0;
  double hbar = 1.0;
};

struct ExtractArgs {
  std::optional<std::string> input;  // CSV written by `frequencies`
  double w1 = 0.0, w2 = 0.0, w3 = 0.0, w4 = 0.0, w5 = 0.0;
  double hbar = 1.0;
};

struct CountsArgs {
  int sites = 16;
};

using Parameters = std::variant<OpticsArgs, DwSpectrumArgs, TransitionArgs, FrequenciesArgs,
                                ExtractArgs, cluster::ScanConfig, CountsArgs>;

struct RunConfig {
  Command command = Command::Counts;
  Parameters parameters = CountsArgs{};
  OutputFormat output_format = OutputFormat::Json;
  std::optional<std::string> output_path;
  UnitsMode units_mode = UnitsMode::Natural;
  int significant_digits = 12;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_config for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// args excludes the program name: {"scan", "--u", "3", ...}.
/// Throws UsageError with a one-line reason naming the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes a parsed command, writing the artifact to `out` (or the output
/// path) and diagnostics to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run with every error mapped onto an exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinlattice::cli
