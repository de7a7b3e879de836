#include "spinlattice/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>

#include "spinlattice/error.hpp"
#include "spinlattice/format.hpp"
#include "spinlattice/spectra.hpp"

namespace spinlattice::cluster {

using fock::Statistics;

std::string_view to_string(NamedGraph g) noexcept {
  switch (g) {
    case NamedGraph::TwoSite: return "two-site";
    case NamedGraph::PlaquetteRing: return "plaquette-ring";
    case NamedGraph::KagomeCell: return "kagome-cell";
    case NamedGraph::KagomeCellFrustrated: return "kagome-cell-frustrated";
    case NamedGraph::Grid4x4: return "grid-4x4";
  }
  return "unknown";
}

std::optional<NamedGraph> parse_graph_name(std::string_view name) {
  for (auto g : {NamedGraph::TwoSite, NamedGraph::PlaquetteRing, NamedGraph::KagomeCell,
                 NamedGraph::KagomeCellFrustrated, NamedGraph::Grid4x4}) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

model::LatticeGraph make_graph(NamedGraph g) {
  // Kagome cell sites in embedding order 22, 23, 32, 33 -> 0, 1, 2, 3.
  switch (g) {
    case NamedGraph::TwoSite: return model::LatticeGraph::two_site();
    case NamedGraph::PlaquetteRing: return model::LatticeGraph::ring(4);
    case NamedGraph::KagomeCell: return model::LatticeGraph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
    case NamedGraph::KagomeCellFrustrated:
      return model::LatticeGraph(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}});
    case NamedGraph::Grid4x4: return model::LatticeGraph::grid(4, 4);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown graph");
}

CountsReport count_cluster_states(int n_sites, Statistics statistics) {
  CountsReport report;
  report.n_sites = n_sites;
  report.statistics = statistics;
  if (statistics == Statistics::Boson) {
    report.boson_states = fock::enumerate_states(n_sites, 2, 0, Statistics::Boson).size();
    return report;
  }
  const auto sz0 = fock::enumerate_states(n_sites, 1, 1, Statistics::Fermion);
  report.sz0_states = sz0.size();
  if (n_sites >= 2) {
    report.polarized_states = fock::enumerate_states(n_sites, 2, 0, Statistics::Fermion).size() +
                              fock::enumerate_states(n_sites, 0, 2, Statistics::Fermion).size();
  }

  const DenseMatrix s2 = fock::spin_squared_matrix(sz0);
  const Eigensystem es = symmetric_eigen(s2);
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    const auto label = fock::total_spin_label(sz0, s2, es.vectors.column(k));
    if (label.mixed()) {
      throw Error(ErrorCode::DomainError, "S^2 eigenvector failed to carry a definite spin");
    }
    if (*label.twice_s == 0) ++report.singlet_multiplicity;
    if (*label.twice_s == 2) ++report.triplet_multiplicity;
  }
  return report;
}

std::string_view to_string(GroundLabel g) noexcept {
  switch (g) {
    case GroundLabel::AFM: return "AFM";
    case GroundLabel::FM: return "FM";
    case GroundLabel::Degenerate: return "Degenerate";
  }
  return "unknown";
}

namespace {

GroundLabel classify(double e_singlet, double e_polarized) {
  if (std::abs(e_singlet - e_polarized) <= kDegeneracyTolerance) return GroundLabel::Degenerate;
  return e_singlet < e_polarized ? GroundLabel::AFM : GroundLabel::FM;
}

// Both sectors of one scan, with the S = 0 projector computed once.
class SectorPair {
 public:
  SectorPair(const model::LatticeGraph& graph, int n_up, int n_down)
      : graph_(graph),
        sz0_(std::make_shared<const fock::Basis>(fock::enumerate_states(
            static_cast<int>(graph.n_sites()), n_up, n_down, Statistics::Fermion))),
        polarized_(std::make_shared<const fock::Basis>(fock::enumerate_states(
            static_cast<int>(graph.n_sites()), n_up + n_down, 0, Statistics::Fermion))),
        singlets_(*sz0_, 0) {}

  const fock::Basis& sz0() const { return *sz0_; }
  const fock::Basis& polarized() const { return *polarized_; }
  std::size_t singlet_dimension() const { return singlets_.dimension(); }

  // (singlet-sector ground, polarized-sector ground) in units of J.
  std::pair<double, double> energies(double u, double v, double j) const {
    const auto c = model::from_dimensionless({u, v, j});
    const double e_singlet = singlets_.ground_energy(model::build_juvj(sz0_, graph_, c));
    const auto polarized = model::build_juvj(polarized_, graph_, c);
    const double e_polarized = symmetric_eigen(polarized.entries).values.front();
    return {e_singlet, e_polarized};
  }

 private:
  const model::LatticeGraph& graph_;
  std::shared_ptr<const fock::Basis> sz0_;
  std::shared_ptr<const fock::Basis> polarized_;
  spectra::SpinProjector singlets_;
};

}  // namespace

ScanResult rvb_scan(const model::LatticeGraph& graph, std::string graph_name, double u, double v,
                    double j_max, int steps, std::optional<int> n_up, std::optional<int> n_down) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "a scan needs at least two steps");
  if (!(j_max > 0.0) || !std::isfinite(j_max)) {
    throw Error(ErrorCode::InvalidArgument, "j_max must be positive and finite");
  }
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "u and v must be finite");
  }
  const int n_sites = static_cast<int>(graph.n_sites());
  if (!n_up && !n_down && n_sites % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "half filling needs an even number of sites");
  }
  const int ups = n_up.value_or(n_sites / 2);
  const int downs = n_down.value_or(n_sites / 2);
  if (ups != downs) {
    throw Error(ErrorCode::InvalidSector, "the singlet sector needs n_up == n_down");
  }
  if (ups + downs > n_sites) {
    throw Error(ErrorCode::InvalidSector, "maximally polarized sector exceeds one fermion per site");
  }
  const fock::Sector sz0{n_sites, ups, downs, Statistics::Fermion};
  const fock::Sector polarized{n_sites, ups + downs, 0, Statistics::Fermion};
  if (fock::sector_dimension(sz0) > kMaxScanDimension ||
      fock::sector_dimension(polarized) > kMaxScanDimension) {
    throw Error(ErrorCode::SectorTooLarge,
                "sector dimension " + std::to_string(fock::sector_dimension(sz0)) +
                    " exceeds the dense cap of " + std::to_string(kMaxScanDimension));
  }

  const SectorPair sectors(graph, ups, downs);
  ScanResult result;
  result.graph_name = std::move(graph_name);
  result.u = u;
  result.v = v;
  result.n_up = ups;
  result.n_down = downs;
  result.sz0_dimension = sectors.sz0().size();
  result.polarized_dimension = sectors.polarized().size();
  result.singlet_dimension = sectors.singlet_dimension();

  result.rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double j = j_max * k / (steps - 1);
    const auto [e_singlet, e_polarized] = sectors.energies(u, v, j);
    result.rows.push_back({j, e_singlet, e_polarized, classify(e_singlet, e_polarized)});
  }

  for (std::size_t k = 1; k < result.rows.size(); ++k) {
    if (result.rows[k - 1].label != GroundLabel::AFM || result.rows[k].label == GroundLabel::AFM) {
      continue;
    }
    double lo = result.rows[k - 1].j;
    double hi = result.rows[k].j;
    auto gap = [&](double j) {
      const auto [s, p] = sectors.energies(u, v, j);
      return s - p;
    };
    while (hi - lo > kCrossingTolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (gap(mid) >= 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    result.crossing = 0.5 * (lo + hi);
    break;
  }
  return result;
}

ScanResult figure4_dataset(const ScanConfig& config) {
  return rvb_scan(make_graph(config.graph), std::string(to_string(config.graph)), config.u,
                  config.v, config.j_max, config.steps, config.n_up, config.n_down);
}

std::string format_scan_csv(const ScanResult& scan, int digits) {
  std::string out = "jex_over_4j,e_afm,e_fm,ground\n";
  for (const auto& row : scan.rows) {
    out += format_number(row.j, digits) + ',' + format_number(row.e_singlet, digits) + ',' +
           format_number(row.e_polarized, digits) + ',' + std::string(to_string(row.label)) + '\n';
  }
  out += "# graph=" + scan.graph_name + '\n';
  out += "# u=" + format_number(scan.u, digits) + '\n';
  out += "# v=" + format_number(scan.v, digits) + '\n';
  out += "# n_up=" + std::to_string(scan.n_up) + '\n';
  out += "# n_down=" + std::to_string(scan.n_down) + '\n';
  out += "# sz0_dimension=" + std::to_string(scan.sz0_dimension) + '\n';
  out += "# singlet_dimension=" + std::to_string(scan.singlet_dimension) + '\n';
  out += "# polarized_dimension=" + std::to_string(scan.polarized_dimension) + '\n';
  out += "# crossing=" + (scan.crossing ? format_number(*scan.crossing, digits) : "none") + '\n';
  return out;
}

SymmetryGroup::SymmetryGroup(const model::LatticeGraph& graph, std::vector<Permutation> generators)
    : n_sites_(graph.n_sites()), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (p.size() != n_sites_) {
      throw Error(ErrorCode::InvalidArgument, "generator length differs from site count");
    }
    std::vector<bool> hit(n_sites_, false);
    for (std::size_t image : p) {
      if (image >= n_sites_ || hit[image]) {
        throw Error(ErrorCode::InvalidArgument, "generator is not a bijection on sites");
      }
      hit[image] = true;
    }
    for (const auto& [a, b] : graph.edges()) {
      if (!graph.has_edge(p[a], p[b])) {
        throw Error(ErrorCode::InvalidArgument, "generator does not map edges onto edges");
      }
    }
  }
}

SymmetryGroup SymmetryGroup::trivial(const model::LatticeGraph& graph) { return {graph, {}}; }

SymmetryGroup SymmetryGroup::dihedral_ring(const model::LatticeGraph& graph) {
  const std::size_t n = graph.n_sites();
  Permutation rotation(n);
  Permutation reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return {graph, {rotation, reflection}};
}

std::vector<Permutation> SymmetryGroup::elements() const {
  Permutation identity(n_sites_);
  for (std::size_t i = 0; i < n_sites_; ++i) identity[i] = i;
  std::vector<Permutation> order{identity};
  std::set<Permutation> seen{identity};
  for (std::size_t next = 0; next < order.size(); ++next) {
    for (const auto& g : generators_) {
      Permutation composed(n_sites_);
      for (std::size_t i = 0; i < n_sites_; ++i) composed[i] = g[order[next][i]];
      if (seen.insert(composed).second) order.push_back(std::move(composed));
    }
  }
  return order;
}

DenseMatrix permutation_operator(const fock::Basis& basis, const Permutation& p) {
  DenseMatrix u(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto image = fock::apply_site_permutation(basis[j], p);
    const auto i = basis.index_of(image.state);
    if (!i) throw Error(ErrorCode::InvalidSector, "permutation left the sector");
    u(*i, j) = image.coefficient;
  }
  return u;
}

double symmetry_expectation(const fock::Basis& basis, const Permutation& p,
                            std::span<const double> vector) {
  return dot(vector, multiply(permutation_operator(basis, p), vector));
}

namespace {

// Character of every group element, from generator characters. Elements are
// those of SymmetryGroup::elements(); each is checked for consistency.
std::map<Permutation, int> element_characters(const SymmetryGroup& g,
                                              std::span<const int> characters) {
  const auto& generators = g.generators();
  if (!characters.empty() && characters.size() != generators.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one character per generator");
  }
  for (int c : characters) {
    if (c != 1 && c != -1) throw Error(ErrorCode::InvalidArgument, "characters must be +1 or -1");
  }
  auto generator_character = [&](std::size_t k) {
    return characters.empty() ? 1 : characters[k];
  };
  auto compose = [](const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
  };

  const auto elements = g.elements();
  std::map<Permutation, int> chi{{elements.front(), 1}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    const int base = chi.at(elements[next]);
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const Permutation product = compose(generators[k], elements[next]);
      const int value = base * generator_character(k);
      auto [it, inserted] = chi.emplace(product, value);
      if (!inserted && it->second != value) {
        throw Error(ErrorCode::InvalidArgument, "characters do not define a representation");
      }
    }
  }
  return chi;
}

}  // namespace

ReducedBlock symmetry_reduce(const model::HamiltonianMatrix& h, const SymmetryGroup& g,
                             std::span<const int> characters) {
  if (!h.basis) throw Error(ErrorCode::InvalidArgument, "Hamiltonian carries no basis");
  const auto& basis = *h.basis;
  if (static_cast<std::size_t>(basis.sector().n_sites) != g.n_sites()) {
    throw Error(ErrorCode::DimensionMismatch, "group and basis act on different site counts");
  }
  if (basis.size() != h.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix dimension differs from basis size");
  }
  const auto chi = element_characters(g, characters);

  const double scale = std::max(1.0, max_abs(h.entries));
  for (const auto& p : g.generators()) {
    const DenseMatrix u = permutation_operator(basis, p);
    const double defect = max_abs_difference(multiply(u, h.entries), multiply(h.entries, u));
    if (defect > 1e-10 * scale) {
      throw Error(ErrorCode::NonCommuting,
                  "generator fails to commute with H (defect " + std::to_string(defect) + ")");
    }
  }

  std::vector<bool> visited(basis.size(), false);
  std::vector<std::vector<double>> columns;
  for (std::size_t seed = 0; seed < basis.size(); ++seed) {
    if (visited[seed]) continue;
    std::vector<double> orbit_sum(basis.size(), 0.0);
    for (const auto& [p, character] : chi) {
      const auto image = fock::apply_site_permutation(basis[seed], p);
      const auto i = basis.index_of(image.state);
      if (!i) throw Error(ErrorCode::InvalidSector, "permutation left the sector");
      orbit_sum[*i] += character * image.coefficient;
      visited[*i] = true;
    }
    const double length = norm(orbit_sum);
    if (length < 1e-12) continue;
    for (double& x : orbit_sum) x /= length;
    columns.push_back(std::move(orbit_sum));
  }
  if (columns.empty()) {
    throw Error(ErrorCode::EmptyBlock, "every orbit sum cancels; no states in this representation");
  }

  ReducedBlock out;
  out.full_dimension = basis.size();
  out.embedding = DenseMatrix(basis.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < basis.size(); ++r) out.embedding(r, c) = columns[c][r];
  out.block = congruence(h.entries, out.embedding);
  return out;
}

}  // namespace spinlattice::cluster
