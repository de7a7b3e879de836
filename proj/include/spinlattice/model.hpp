#pragma once

// Dense Hamiltonians for the Hubbard and J-U-V-Jex models on small graphs.
// Matrix entries are divided by the tunneling J whenever J > 0.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinlattice/fock.hpp"
#include "spinlattice/linalg.hpp"

namespace spinlattice::model {

class LatticeGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  // Throws Error(InvalidArgument) on self-loops, duplicate edges or
  // out-of-range sites. Edges are stored with first < second.
  LatticeGraph(std::size_t n_sites, std::vector<Edge> edges);

  std::size_t n_sites() const noexcept { return n_sites_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;

  static LatticeGraph two_site();
  static LatticeGraph ring(std::size_t n);
  // Open-boundary rows x cols grid, site index = row * cols + col.
  static LatticeGraph grid(std::size_t rows, std::size_t cols);

 private:
  std::size_t n_sites_;
  std::vector<Edge> edges_;
};

struct CouplingSet {
  double hop_j = 1.0;              // J >= 0
  double onsite_u = 0.0;           // U
  double intersite_v = 0.0;        // V
  double superexchange_jex = 0.0;  // J_ex
  double bias_delta = 0.0;         // double-well tilt, two-site graphs only

  void validate() const;
};

// Couplings measured against 4J.
struct DimensionlessCouplings {
  double u = 0.0;  // U / 4J
  double v = 0.0;  // V / 4J
  double j = 0.0;  // J_ex / 4J
};

/// Throws Error(ZeroHopping) when hop_j == 0.
DimensionlessCouplings to_dimensionless(const CouplingSet& c);

/// Inverse of to_dimensionless with J = 1.
CouplingSet from_dimensionless(const DimensionlessCouplings& dc);

struct HamiltonianMatrix {
  DenseMatrix entries;
  std::shared_ptr<const fock::Basis> basis;
  double energy_unit = 1.0;  // J when J > 0, else 1

  std::size_t dimension() const noexcept { return entries.rows(); }
};

/// -J sum_edges,sigma (a+_a a_b + h.c.) - (Delta/2)(n_0 - n_1) + U sum_i n_up n_down.
/// Errors: GraphMismatch, BiasUnsupported (Delta != 0 beyond two sites),
/// InvalidSector (bosonic basis).
HamiltonianMatrix build_hubbard(std::shared_ptr<const fock::Basis> basis, const LatticeGraph& graph,
                                const CouplingSet& c);

/// Hubbard terms plus, for every edge (a, b),
///   + V n_a n_b
///   - J_ex sum_{sigma, tau} a+_{sigma a} a+_{tau b} a_{sigma b} a_{tau a}.
/// The tau = sigma part of the exchange sum is the density product
/// n_{sigma a} n_{sigma b}; the tau != sigma part is apply_exchange.
/// Errors: GraphMismatch, NonzeroBias, InvalidSector.
HamiltonianMatrix build_juvj(std::shared_ptr<const fock::Basis> basis, const LatticeGraph& graph,
                             const CouplingSet& c);

}  // namespace spinlattice::model
