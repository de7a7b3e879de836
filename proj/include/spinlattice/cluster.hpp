#pragma once

// Cluster experiments: state counting on the 16-site lattice, the
// antiferromagnetic-to-ferromagnetic ground-state scan in J_ex/4J, and
// symmetry reduction of sector Hamiltonians.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinlattice/fock.hpp"
#include "spinlattice/linalg.hpp"
#include "spinlattice/model.hpp"

namespace spinlattice::cluster {

// Largest sector a scan will diagonalize densely.
inline constexpr std::size_t kMaxScanDimension = 10'000;
inline constexpr double kDegeneracyTolerance = 1e-10;
inline constexpr double kCrossingTolerance = 1e-12;

enum class NamedGraph {
  TwoSite,               // double well
  PlaquetteRing,         // 4-site ring
  KagomeCell,            // sites 22, 23, 32, 33 of the 4x4 embedding: a 4-cycle
  KagomeCellFrustrated,  // the same 4-cycle plus the 22-33 diagonal
  Grid4x4,               // open-boundary 4x4 square lattice
};

std::string_view to_string(NamedGraph g) noexcept;
std::optional<NamedGraph> parse_graph_name(std::string_view name);
model::LatticeGraph make_graph(NamedGraph g);

struct CountsReport {
  int n_sites = 0;
  fock::Statistics statistics = fock::Statistics::Fermion;
  // Two fermions:
  std::size_t sz0_states = 0;              // one up, one down: n^2
  std::size_t polarized_states = 0;        // two up plus two down: 2 C(n, 2)
  std::size_t singlet_multiplicity = 0;    // S = 0 states inside the Sz = 0 sector
  std::size_t triplet_multiplicity = 0;    // S = 1 states inside the Sz = 0 sector
  // Two spinless bosons:
  std::size_t boson_states = 0;            // C(n + 1, 2)
};

/// Sector sizes for two particles on n_sites, enumerated rather than taken
/// from closed forms. For fermions the Sz = 0 sector is also split by total
/// spin, by labelling every eigenvector of S^2.
CountsReport count_cluster_states(int n_sites, fock::Statistics statistics);

enum class GroundLabel { AFM, FM, Degenerate };
std::string_view to_string(GroundLabel g) noexcept;

struct ScanRow {
  double j = 0.0;            // J_ex / 4J
  double e_singlet = 0.0;    // lowest S = 0 energy in the Sz = 0 sector, units of J
  double e_polarized = 0.0;  // lowest energy of the maximally polarized sector
  GroundLabel label = GroundLabel::AFM;
};

struct ScanResult {
  std::string graph_name;
  double u = 0.0;
  double v = 0.0;
  int n_up = 0;
  int n_down = 0;
  std::size_t sz0_dimension = 0;
  std::size_t singlet_dimension = 0;
  std::size_t polarized_dimension = 0;
  std::vector<ScanRow> rows;      // ascending j, starting at 0
  std::optional<double> crossing;  // first AFM -> non-AFM switch, refined by bisection
};

struct ScanConfig {
  NamedGraph graph = NamedGraph::PlaquetteRing;
  double u = 3.0;
  double v = 0.0;
  double j_max = 0.5;
  int steps = 101;
  // Defaults to half filling, n_sites / 2 of each spin.
  std::optional<int> n_up;
  std::optional<int> n_down;
};

/// Scans J_ex/4J over steps uniform points in [0, j_max].
/// Errors: InvalidArgument (steps < 2, j_max <= 0, odd half filling),
/// InvalidSector (n_up != n_down), SectorTooLarge.
ScanResult rvb_scan(const model::LatticeGraph& graph, std::string graph_name, double u, double v,
                    double j_max, int steps, std::optional<int> n_up = std::nullopt,
                    std::optional<int> n_down = std::nullopt);

ScanResult figure4_dataset(const ScanConfig& config);

// CSV with header jex_over_4j,e_afm,e_fm,ground followed by one row per scan
// point and trailing "# key=value" metadata lines.
std::string format_scan_csv(const ScanResult& scan, int significant_digits);

using Permutation = std::vector<std::size_t>;

// Site permutations that map graph edges onto graph edges.
class SymmetryGroup {
 public:
  /// Throws Error(InvalidArgument) when a generator is not a bijection or
  /// does not preserve the edge set.
  SymmetryGroup(const model::LatticeGraph& graph, std::vector<Permutation> generators);

  static SymmetryGroup trivial(const model::LatticeGraph& graph);
  // Rotation by one site and the reflection i -> -i of a ring graph.
  static SymmetryGroup dihedral_ring(const model::LatticeGraph& graph);

  std::size_t n_sites() const noexcept { return n_sites_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // Closure of the generators, identity first.
  std::vector<Permutation> elements() const;

 private:
  std::size_t n_sites_;
  std::vector<Permutation> generators_;
};

/// Signed permutation matrix of a site relabeling on a sector basis.
DenseMatrix permutation_operator(const fock::Basis& basis, const Permutation& p);

struct ReducedBlock {
  DenseMatrix block;      // Q^T H Q
  DenseMatrix embedding;  // Q, columns are orthonormal symmetric orbit sums
  std::size_t full_dimension = 0;
};

/// Restricts h to a one-dimensional representation of the group: the
/// trivial one by default, or the one assigning characters[k] = +1 or -1 to
/// generator k.
/// Errors: NonCommuting (a generator fails [U, H] = 0 to 1e-10),
/// EmptyBlock (every orbit sum cancels), DimensionMismatch,
/// InvalidArgument (characters that do not define a representation).
ReducedBlock symmetry_reduce(const model::HamiltonianMatrix& h, const SymmetryGroup& g,
                             std::span<const int> characters = {});

/// <v| U_p |v>, the parity of a normalized vector under one site permutation.
double symmetry_expectation(const fock::Basis& basis, const Permutation& p,
                            std::span<const double> vector);

}  // namespace spinlattice::cluster
