#include "spinlattice/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinlattice/error.hpp"
#include "spinlattice/format.hpp"
#include "spinlattice/model.hpp"
#include "spinlattice/optics.hpp"
#include "spinlattice/spectra.hpp"

namespace spinlattice::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPrecisionVariable = "SPINLATTICE_PRECISION";

struct CommandInfo {
  Command command;
  std::string_view name;
  std::string_view summary;
  OutputFormat default_format;
};

constexpr CommandInfo kCommands[] = {
    {Command::Optics, "optics", "superlattice trap quantities", OutputFormat::Json},
    {Command::DwSpectrum, "dw-spectrum", "two-site J-U-V-Jex spectrum", OutputFormat::Csv},
    {Command::Transition, "transition", "singlet/triplet transition point", OutputFormat::Json},
    {Command::Frequencies, "frequencies", "double-well oscillation frequencies",
     OutputFormat::Csv},
    {Command::Extract, "extract", "couplings from measured frequencies", OutputFormat::Json},
    {Command::Scan, "scan", "AFM/FM ground-state scan in J_ex/4J", OutputFormat::Csv},
    {Command::Counts, "counts", "two-particle state counts on a cluster", OutputFormat::Json},
};

std::string overview() {
  std::string text = "usage: spinlattice <command> [--key value ...] [--config FILE]\n\ncommands:\n";
  for (const auto& entry : kCommands) {
    text += "  " + std::string(entry.name);
    text.append(14 - std::min<std::size_t>(entry.name.size(), 13), ' ');
    text += std::string(entry.summary) + '\n';
  }
  text += "\nRun `spinlattice <command> --help` for the keys of one command.\n";
  return text;
}

std::string first_line(std::string text) {
  const auto cut = text.find('\n');
  if (cut != std::string::npos) text.resize(cut);
  return text;
}

int precision_from_environment() {
  const char* raw = std::getenv(kPrecisionVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultSignificantDigits;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 17) {
    throw UsageError(std::string(kPrecisionVariable) + ": expected an integer in [1, 17], got '" +
                     raw + "'");
  }
  return static_cast<int>(value);
}

// Keeps track of which options the user set, from flags or the config file.
struct Flags {
  CLI::App& app;

  CLI::Option* add(const std::string& key, double& target, const std::string& help) {
    return app.add_option("--" + key, target, help)->capture_default_str();
  }
  CLI::Option* add(const std::string& key, int& target, const std::string& help) {
    return app.add_option("--" + key, target, help)->capture_default_str();
  }
  CLI::Option* add(const std::string& key, std::string& target, const std::string& help) {
    return app.add_option("--" + key, target, help)->capture_default_str();
  }
};

bool given(const CLI::Option* opt) { return opt->count() > 0; }

// Either every option of a group is set or none is.
bool all_or_none(const std::vector<CLI::Option*>& group) {
  const auto set = std::count_if(group.begin(), group.end(), given);
  if (set == 0) return false;
  if (set != static_cast<long>(group.size())) {
    for (const auto* opt : group) {
      if (!given(opt)) throw UsageError(opt->get_name() + ": required together with the other " +
                                        group.front()->get_name() + " group keys");
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  for (const auto& entry : kCommands)
    if (entry.command == c) return entry.name;
  return "unknown";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing command; run `spinlattice --help`");
  if (args[0] == "--help" || args[0] == "-h") throw HelpRequested(overview());

  const CommandInfo* selected = nullptr;
  for (const auto& entry : kCommands)
    if (entry.name == args[0]) selected = &entry;
  if (selected == nullptr) throw UsageError("unknown command '" + args[0] + "'");

  RunConfig config;
  config.command = selected->command;
  config.output_format = selected->default_format;

  CLI::App app{std::string(selected->summary), "spinlattice " + std::string(selected->name)};
  app.set_config("--config", "", "flat key = value file; flags override its values");
  app.allow_config_extras(CLI::config_extras_mode::error);
  Flags flags{app};

  std::string format = selected->default_format == OutputFormat::Csv ? "csv" : "json";
  std::string units = "natural";
  std::string output;
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--units", units, "natural (hbar = eps0 = c = 1) or physical (SI)")
      ->check(CLI::IsMember({"natural", "physical"}))
      ->capture_default_str();
  auto* output_opt = app.add_option("--output", output, "write the artifact here instead of stdout");

  OpticsArgs optics;
  OpticsArgs::Dipole dipole{};
  OpticsArgs::Atom atom{};
  DwSpectrumArgs spectrum;
  TransitionArgs transition;
  FrequenciesArgs frequencies;
  ExtractArgs extract;
  cluster::ScanConfig scan;
  CountsArgs counts;
  std::string graph_name(cluster::to_string(scan.graph));
  std::string input;

  std::vector<CLI::Option*> dipole_group;
  std::vector<CLI::Option*> species_group;
  CLI::Option* mass_opt = nullptr;
  CLI::Option* wavelength_opt = nullptr;
  CLI::Option* hbar_opt = nullptr;
  CLI::Option* input_opt = nullptr;
  std::vector<CLI::Option*> frequency_opts;
  CLI::Option* nup_opt = nullptr;
  CLI::Option* ndown_opt = nullptr;
  int n_up = 0;
  int n_down = 0;

  switch (config.command) {
    case Command::Optics:
      flags.add("v1", optics.v1, "long-lattice depth, recoil units")->check(CLI::NonNegativeNumber);
      flags.add("v2", optics.v2, "short-lattice depth, recoil units")->check(CLI::NonNegativeNumber);
      flags.add("d", optics.d, "long-lattice period")->check(CLI::PositiveNumber);
      flags.add("phase", optics.phase, "relative phase of the long lattice, radians");
      mass_opt = flags.add("mass", optics.mass, "atom mass")->check(CLI::PositiveNumber);
      wavelength_opt =
          flags.add("wavelength", optics.wavelength, "short-lattice wavelength")->check(CLI::PositiveNumber);
      flags.add("x", optics.x, "position at which to evaluate the potential");
      dipole_group = {
          flags.add("intensity", dipole.intensity, "laser intensity")->check(CLI::NonNegativeNumber),
          flags.add("alpha", dipole.alpha, "real part of the polarizability"),
          flags.add("omega", dipole.omega, "laser frequency, rad/s")->check(CLI::PositiveNumber),
          flags.add("omega0", dipole.omega0, "transition frequency, rad/s")->check(CLI::PositiveNumber),
      };
      species_group = {
          flags.add("protons", atom.protons, "proton count")->check(CLI::PositiveNumber),
          flags.add("neutrons", atom.neutrons, "neutron count")->check(CLI::NonNegativeNumber),
          flags.add("electrons", atom.electrons, "electron count")->check(CLI::PositiveNumber),
      };
      break;
    case Command::DwSpectrum:
      flags.add("u", spectrum.u, "U/4J");
      flags.add("v", spectrum.v, "V/4J");
      flags.add("jex", spectrum.jex, "J_ex/4J");
      break;
    case Command::Transition:
      flags.add("u", transition.u, "U/4J");
      flags.add("v", transition.v, "V/4J");
      break;
    case Command::Frequencies:
      flags.add("j", frequencies.j, "tunneling J, energy units")->check(CLI::PositiveNumber);
      flags.add("u", frequencies.u, "on-site U");
      flags.add("v", frequencies.v, "nearest-neighbour V");
      flags.add("jex", frequencies.jex, "superexchange J_ex");
      hbar_opt = flags.add("hbar", frequencies.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
      break;
    case Command::Extract:
      input_opt = flags.add("input", input, "CSV with a w1,w2,w3,w4,w5 header");
      frequency_opts = {flags.add("w1", extract.w1, "frequency w1"),
                        flags.add("w2", extract.w2, "frequency w2"),
                        flags.add("w3", extract.w3, "frequency w3"),
                        flags.add("w4", extract.w4, "frequency w4"),
                        flags.add("w5", extract.w5, "frequency w5")};
      for (auto* opt : frequency_opts) opt->excludes(input_opt);
      hbar_opt = flags.add("hbar", extract.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
      break;
    case Command::Scan:
      flags.add("graph", graph_name,
                "two-site, plaquette-ring, kagome-cell, kagome-cell-frustrated or grid-4x4");
      flags.add("u", scan.u, "U/4J");
      flags.add("v", scan.v, "V/4J");
      flags.add("jmax", scan.j_max, "largest J_ex/4J")->check(CLI::PositiveNumber);
      flags.add("steps", scan.steps, "grid points, at least 2")->check(CLI::Range(2, 1'000'000));
      nup_opt = flags.add("nup", n_up, "spin-up fermions (default: half filling)")
                    ->check(CLI::NonNegativeNumber);
      ndown_opt = flags.add("ndown", n_down, "spin-down fermions (default: half filling)")
                      ->check(CLI::NonNegativeNumber);
      break;
    case Command::Counts:
      flags.add("sites", counts.sites, "number of lattice sites")->check(CLI::Range(1, 64));
      break;
  }

  std::vector<std::string> reversed(args.begin() + 1, args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(first_line(e.what()));
  }

  config.output_format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  config.units_mode = units == "physical" ? UnitsMode::Physical : UnitsMode::Natural;
  if (given(output_opt)) config.output_path = output;
  config.significant_digits = precision_from_environment();

  switch (config.command) {
    case Command::Optics:
      if (config.units_mode == UnitsMode::Physical) {
        if (!given(mass_opt)) throw UsageError("--mass: required in physical units");
        if (!given(wavelength_opt)) throw UsageError("--wavelength: required in physical units");
      }
      if (all_or_none(dipole_group)) optics.dipole = dipole;
      if (all_or_none(species_group)) optics.species = atom;
      config.parameters = optics;
      break;
    case Command::DwSpectrum:
      config.parameters = spectrum;
      break;
    case Command::Transition:
      config.parameters = transition;
      break;
    case Command::Frequencies:
      if (config.units_mode == UnitsMode::Physical && !given(hbar_opt)) frequencies.hbar = kHbarSI;
      config.parameters = frequencies;
      break;
    case Command::Extract:
      if (config.units_mode == UnitsMode::Physical && !given(hbar_opt)) extract.hbar = kHbarSI;
      if (given(input_opt)) {
        extract.input = input;
      } else {
        for (auto* opt : frequency_opts) {
          if (!given(opt)) throw UsageError(opt->get_name() + ": required unless --input is given");
        }
      }
      config.parameters = extract;
      break;
    case Command::Scan: {
      const auto graph = cluster::parse_graph_name(graph_name);
      if (!graph) throw UsageError("--graph: unknown graph '" + graph_name + "'");
      scan.graph = *graph;
      if (given(nup_opt) != given(ndown_opt)) {
        throw UsageError(std::string(given(nup_opt) ? "--ndown" : "--nup") +
                         ": --nup and --ndown go together");
      }
      if (given(nup_opt)) {
        scan.n_up = n_up;
        scan.n_down = n_down;
      }
      config.parameters = scan;
      break;
    }
    case Command::Counts:
      config.parameters = counts;
      break;
  }
  return config;
}

namespace {

using Value = std::variant<std::monostate, double, long long, bool, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string csv_cell(const Value& value, int digits) {
  return std::visit(
      [digits](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        if constexpr (std::is_same_v<T, double>) return format_number(x, digits);
        if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        if constexpr (std::is_same_v<T, std::string>) {
          if (x.find_first_of(",\"\n") == std::string::npos) return x;
          std::string quoted = "\"";
          for (const char ch : x) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return quoted + '"';
        }
      },
      value);
}

Json json_value(const Value& value, int digits) {
  return std::visit(
      [digits](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) return round_significant(x, digits);
        else return x;
      },
      value);
}

Json to_json(const Record& record, int digits) {
  Json object = Json::object();
  for (const auto& [key, value] : record) object[key] = json_value(value, digits);
  return object;
}

// One record renders as a JSON object, several as an array.
std::string render(const std::vector<Record>& records, OutputFormat format, int digits) {
  if (format == OutputFormat::Json) {
    if (records.size() == 1) return to_json(records.front(), digits).dump(2) + '\n';
    Json array = Json::array();
    for (const auto& r : records) array.push_back(to_json(r, digits));
    return array.dump(2) + '\n';
  }
  std::string text;
  if (records.empty()) return text;
  for (std::size_t k = 0; k < records.front().size(); ++k) {
    text += (k ? "," : "") + records.front()[k].first;
  }
  text += '\n';
  for (const auto& r : records) {
    for (std::size_t k = 0; k < r.size(); ++k) text += (k ? "," : "") + csv_cell(r[k].second, digits);
    text += '\n';
  }
  return text;
}

std::string run_optics(const OpticsArgs& a, const RunConfig& config, std::ostream& err) {
  const UnitSystem units = unit_system(config.units_mode);
  const optics::LatticeParams lattice{a.v1, a.v2, a.d, a.phase, a.mass, a.wavelength};
  lattice.validate();
  Record record;
  record.emplace_back("recoil_energy", optics::recoil_energy(a.mass, a.wavelength, units));
  record.emplace_back("potential", optics::superlattice_potential(a.x, lattice));
  record.emplace_back("effective_double_well", optics::is_effective_double_well(lattice));
  try {
    record.emplace_back("josephson_frequency", optics::josephson_frequency(lattice, units));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
    err << "warning: " << e.what() << '\n';
    record.emplace_back("josephson_frequency", std::monostate{});
  }
  if (a.dipole) {
    const optics::DipoleField field{a.dipole->intensity, a.dipole->alpha, a.dipole->omega,
                                    a.dipole->omega0};
    record.emplace_back("dipole_potential", optics::dipole_potential(field, units));
    record.emplace_back("detuning", std::string(optics::to_string(optics::detuning_class(field))));
  }
  if (a.species) {
    const optics::Species s{a.species->protons, a.species->neutrons, a.species->electrons};
    record.emplace_back("statistics", std::string(optics::to_string(optics::classify_species(s))));
  }
  return render({record}, config.output_format, config.significant_digits);
}

std::string run_dw_spectrum(const DwSpectrumArgs& a, const RunConfig& config) {
  const model::DimensionlessCouplings dc{a.u, a.v, a.jex};
  const auto couplings = model::from_dimensionless(dc);
  const auto graph = model::LatticeGraph::two_site();
  const auto sz0 = std::make_shared<const fock::Basis>(
      fock::enumerate_states(2, 1, 1, fock::Statistics::Fermion));
  const auto polarized = std::make_shared<const fock::Basis>(
      fock::enumerate_states(2, 2, 0, fock::Statistics::Fermion));

  std::vector<Record> levels;
  auto add_levels = [&](const std::shared_ptr<const fock::Basis>& basis, const char* sector) {
    const auto h = model::build_juvj(basis, graph, couplings);
    const auto spectrum = spectra::eigen_symmetric(h);
    const auto s2 = fock::spin_squared_matrix(*basis);
    for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
      const auto label = fock::total_spin_label(*basis, s2, spectrum.eigenvectors.column(k));
      levels.push_back({{"sector", std::string(sector)},
                        {"index", static_cast<long long>(k)},
                        {"energy", spectrum.eigenvalues[k]},
                        {"spin", label.to_string()}});
    }
    return h;
  };
  const auto h_sz0 = add_levels(sz0, "sz0");
  add_levels(polarized, "polarized");

  if (config.output_format == OutputFormat::Csv) {
    return render(levels, config.output_format, config.significant_digits);
  }
  const int digits = config.significant_digits;
  const double e_singlet = spectra::SpinProjector(*sz0, 0).ground_energy(h_sz0);
  Json doc = Json::object();
  doc["u"] = round_significant(a.u, digits);
  doc["v"] = round_significant(a.v, digits);
  doc["jex"] = round_significant(a.jex, digits);
  doc["singlet_energy"] = round_significant(e_singlet, digits);
  doc["singlet_energy_closed_form"] = round_significant(spectra::singlet_energy(dc), digits);
  doc["triplet_energy_closed_form"] = round_significant(spectra::triplet_energy(dc), digits);
  doc["levels"] = Json::array();
  for (const auto& r : levels) doc["levels"].push_back(to_json(r, digits));
  return doc.dump(2) + '\n';
}

std::string run_transition(const TransitionArgs& a, const RunConfig& config) {
  Record record{{"j_crit", spectra::transition_point(a.u, a.v)},
                {"j_crit_closed_form", spectra::transition_point_closed_form(a.u, a.v)},
                {"j_crit_alternate", spectra::transition_point_alternate(a.u, a.v)}};
  return render({record}, config.output_format, config.significant_digits);
}

std::string run_frequencies(const FrequenciesArgs& a, const RunConfig& config, std::ostream& err) {
  const model::CouplingSet c{a.j, a.u, a.v, a.jex, 0.0};
  const auto f = spectra::evolution_frequencies(c, a.hbar);
  if (f.w5 < 0.0) err << "warning: NegativeFrequency: w5 < 0 because V < J_ex\n";
  if (f.w4 < 0.0) err << "warning: NegativeFrequency: w4 < 0 because the singlet energy is positive\n";
  Record record{{"w1", f.w1}, {"w2", f.w2}, {"w3", f.w3}, {"w4", f.w4}, {"w5", f.w5}};
  return render({record}, config.output_format, config.significant_digits);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    cells.push_back(cell);
  }
  return cells;
}

spectra::FrequencySet read_frequency_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("--input: cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split_csv(line));
  }
  if (rows.size() < 2) throw UsageError("--input: expected a header row and one data row");
  const auto& header = rows[0];
  const auto& values = rows[1];
  auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw UsageError("--input: missing column " + name);
    const auto k = static_cast<std::size_t>(it - header.begin());
    if (k >= values.size()) throw UsageError("--input: short data row");
    char* end = nullptr;
    const double x = std::strtod(values[k].c_str(), &end);
    if (end == values[k].c_str() || *end != '\0') {
      throw UsageError("--input: column " + name + " is not a number: '" + values[k] + "'");
    }
    return x;
  };
  spectra::FrequencySet f;
  f.w1 = column("w1");
  f.w2 = column("w2");
  f.w3 = column("w3");
  f.w4 = column("w4");
  f.w5 = column("w5");
  return f;
}

std::string run_extract(const ExtractArgs& a, const RunConfig& config) {
  spectra::FrequencySet f;
  if (a.input) {
    f = read_frequency_csv(*a.input);
  } else {
    f.w1 = a.w1;
    f.w2 = a.w2;
    f.w3 = a.w3;
    f.w4 = a.w4;
    f.w5 = a.w5;
  }
  f.hbar = a.hbar;
  const auto result = spectra::extract_couplings(f);
  const auto& c = result.couplings;
  Record record{{"j", c.hop_j},
                {"u", c.onsite_u},
                {"v", c.intersite_v},
                {"jex", c.superexchange_jex},
                {"residual", result.residual}};
  return render({record}, config.output_format, config.significant_digits);
}

std::string run_scan(const cluster::ScanConfig& scan_config, const RunConfig& config) {
  const auto scan = cluster::figure4_dataset(scan_config);
  const int digits = config.significant_digits;
  if (config.output_format == OutputFormat::Csv) return cluster::format_scan_csv(scan, digits);
  Json doc = Json::object();
  doc["graph"] = scan.graph_name;
  doc["u"] = round_significant(scan.u, digits);
  doc["v"] = round_significant(scan.v, digits);
  doc["n_up"] = scan.n_up;
  doc["n_down"] = scan.n_down;
  doc["sz0_dimension"] = scan.sz0_dimension;
  doc["singlet_dimension"] = scan.singlet_dimension;
  doc["polarized_dimension"] = scan.polarized_dimension;
  doc["crossing"] = scan.crossing ? Json(round_significant(*scan.crossing, digits)) : Json(nullptr);
  doc["rows"] = Json::array();
  for (const auto& row : scan.rows) {
    doc["rows"].push_back({{"jex_over_4j", round_significant(row.j, digits)},
                           {"e_afm", round_significant(row.e_singlet, digits)},
                           {"e_fm", round_significant(row.e_polarized, digits)},
                           {"ground", std::string(cluster::to_string(row.label))}});
  }
  return doc.dump(2) + '\n';
}

std::string run_counts(const CountsArgs& a, const RunConfig& config) {
  const auto fermions = cluster::count_cluster_states(a.sites, fock::Statistics::Fermion);
  const auto bosons = cluster::count_cluster_states(a.sites, fock::Statistics::Boson);
  auto count = [](std::size_t n) { return static_cast<long long>(n); };
  Record record{{"sites", static_cast<long long>(a.sites)},
                {"fermion_sz0_states", count(fermions.sz0_states)},
                {"fermion_polarized_states", count(fermions.polarized_states)},
                {"fermion_singlet_multiplicity", count(fermions.singlet_multiplicity)},
                {"fermion_triplet_multiplicity", count(fermions.triplet_multiplicity)},
                {"boson_states", count(bosons.boson_states)}};
  return render({record}, config.output_format, config.significant_digits);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string artifact;
  try {
    artifact = std::visit(
        [&](const auto& p) -> std::string {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, OpticsArgs>) return run_optics(p, config, err);
          if constexpr (std::is_same_v<T, DwSpectrumArgs>) return run_dw_spectrum(p, config);
          if constexpr (std::is_same_v<T, TransitionArgs>) return run_transition(p, config);
          if constexpr (std::is_same_v<T, FrequenciesArgs>) return run_frequencies(p, config, err);
          if constexpr (std::is_same_v<T, ExtractArgs>) return run_extract(p, config);
          if constexpr (std::is_same_v<T, cluster::ScanConfig>) return run_scan(p, config);
          if constexpr (std::is_same_v<T, CountsArgs>) return run_counts(p, config);
        },
        config.parameters);
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!(file << artifact)) {
      err << "IoError: cannot write '" << *config.output_path << "'\n";
      return 2;
    }
    return 0;
  }
  out << artifact;
  return 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << '\n';
    return 1;
  }
  return run(config, out, err);
}

}  // namespace spinlattice::cli
