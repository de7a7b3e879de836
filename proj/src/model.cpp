#include "spinlattice/model.hpp"

#include <algorithm>
#include <cmath>

#include "spinlattice/error.hpp"

namespace spinlattice::model {

using fock::Spin;
using fock::Statistics;

LatticeGraph::LatticeGraph(std::size_t n_sites, std::vector<Edge> edges)
    : n_sites_(n_sites), edges_(std::move(edges)) {
  if (n_sites_ == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one site");
  for (auto& [a, b] : edges_) {
    if (a == b) throw Error(ErrorCode::InvalidArgument, "graph edge is a self-loop");
    if (a >= n_sites_ || b >= n_sites_) {
      throw Error(ErrorCode::InvalidArgument, "graph edge references a site out of range");
    }
    if (a > b) std::swap(a, b);
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "graph has a duplicate edge");
  }
}

bool LatticeGraph::has_edge(std::size_t a, std::size_t b) const {
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

LatticeGraph LatticeGraph::two_site() { return LatticeGraph(2, {{0, 1}}); }

LatticeGraph LatticeGraph::ring(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a ring needs at least three sites");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return LatticeGraph(n, std::move(edges));
}

LatticeGraph LatticeGraph::grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t site = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(site, site + 1);
      if (r + 1 < rows) edges.emplace_back(site, site + cols);
    }
  }
  return LatticeGraph(rows * cols, std::move(edges));
}

void CouplingSet::validate() const {
  if (!(hop_j >= 0.0)) throw Error(ErrorCode::InvalidArgument, "hop_j must be nonnegative");
  for (double x : {hop_j, onsite_u, intersite_v, superexchange_jex, bias_delta}) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "couplings must be finite");
  }
}

DimensionlessCouplings to_dimensionless(const CouplingSet& c) {
  c.validate();
  if (c.hop_j == 0.0) throw Error(ErrorCode::ZeroHopping, "ratios to 4J need J > 0");
  const double four_j = 4.0 * c.hop_j;
  return {c.onsite_u / four_j, c.intersite_v / four_j, c.superexchange_jex / four_j};
}

CouplingSet from_dimensionless(const DimensionlessCouplings& dc) {
  return {1.0, 4.0 * dc.u, 4.0 * dc.v, 4.0 * dc.j, 0.0};
}

namespace {

void check_inputs(const std::shared_ptr<const fock::Basis>& basis, const LatticeGraph& graph,
                  const CouplingSet& c) {
  if (!basis) throw Error(ErrorCode::InvalidArgument, "null basis");
  c.validate();
  if (basis->sector().statistics != Statistics::Fermion) {
    throw Error(ErrorCode::InvalidSector, "Hamiltonian builders need a fermionic basis");
  }
  if (static_cast<std::size_t>(basis->sector().n_sites) != graph.n_sites()) {
    throw Error(ErrorCode::GraphMismatch, "basis has " + std::to_string(basis->sector().n_sites) +
                                              " sites but graph has " +
                                              std::to_string(graph.n_sites()));
  }
}

class MatrixBuilder {
 public:
  MatrixBuilder(std::shared_ptr<const fock::Basis> basis, double unit)
      : basis_(std::move(basis)), unit_(unit), m_(basis_->size(), basis_->size()) {}

  const fock::Basis& basis() const { return *basis_; }

  void add_diagonal(std::size_t i, double value) { m_(i, i) += value / unit_; }

  // Adds value * coefficient at (row of image, column j).
  void add_transition(std::size_t j, const fock::Amplitude& image, double value) {
    const auto i = basis_->index_of(image.state);
    if (!i) throw Error(ErrorCode::InvalidSector, "operator left the basis sector");
    m_(*i, j) += value * image.coefficient / unit_;
  }

  HamiltonianMatrix finish() && {
    return {std::move(m_), std::move(basis_), unit_};
  }

 private:
  std::shared_ptr<const fock::Basis> basis_;
  double unit_;
  DenseMatrix m_;
};

double energy_unit(const CouplingSet& c) { return c.hop_j > 0.0 ? c.hop_j : 1.0; }

void add_hubbard_terms(MatrixBuilder& b, const LatticeGraph& graph, const CouplingSet& c) {
  const auto& basis = b.basis();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& s = basis[j];
    double diagonal = 0.0;
    for (std::size_t site = 0; site < s.n_sites(); ++site) {
      diagonal += c.onsite_u * s.occupation(site, Spin::Up) * s.occupation(site, Spin::Down);
    }
    if (c.bias_delta != 0.0) {
      diagonal -= 0.5 * c.bias_delta * (s.site_occupation(0) - s.site_occupation(1));
    }
    b.add_diagonal(j, diagonal);

    if (c.hop_j == 0.0) continue;
    for (const auto& [x, y] : graph.edges()) {
      for (Spin spin : {Spin::Up, Spin::Down}) {
        if (auto image = fock::apply_hop(s, x, y, spin, Statistics::Fermion)) {
          b.add_transition(j, *image, -c.hop_j);
        }
        if (auto image = fock::apply_hop(s, y, x, spin, Statistics::Fermion)) {
          b.add_transition(j, *image, -c.hop_j);
        }
      }
    }
  }
}

}  // namespace

HamiltonianMatrix build_hubbard(std::shared_ptr<const fock::Basis> basis, const LatticeGraph& graph,
                                const CouplingSet& c) {
  check_inputs(basis, graph, c);
  if (c.bias_delta != 0.0 && graph.n_sites() != 2) {
    throw Error(ErrorCode::BiasUnsupported, "the tilt term is defined for two-site graphs only");
  }
  MatrixBuilder b(std::move(basis), energy_unit(c));
  add_hubbard_terms(b, graph, c);
  return std::move(b).finish();
}

HamiltonianMatrix build_juvj(std::shared_ptr<const fock::Basis> basis, const LatticeGraph& graph,
                             const CouplingSet& c) {
  check_inputs(basis, graph, c);
  if (c.bias_delta != 0.0) {
    throw Error(ErrorCode::NonzeroBias, "the J-U-V-Jex model is defined for symmetric wells");
  }
  MatrixBuilder b(std::move(basis), energy_unit(c));
  add_hubbard_terms(b, graph, c);

  const auto& states = b.basis();
  for (std::size_t j = 0; j < states.size(); ++j) {
    const auto& s = states[j];
    double diagonal = 0.0;
    for (const auto& [x, y] : graph.edges()) {
      diagonal += c.intersite_v * s.site_occupation(x) * s.site_occupation(y);
      const int same_spin = s.occupation(x, Spin::Up) * s.occupation(y, Spin::Up) +
                            s.occupation(x, Spin::Down) * s.occupation(y, Spin::Down);
      diagonal -= c.superexchange_jex * same_spin;
      if (c.superexchange_jex == 0.0) continue;
      if (auto image = fock::apply_exchange(s, x, y)) {
        b.add_transition(j, *image, -c.superexchange_jex);
      }
    }
    b.add_diagonal(j, diagonal);
  }
  return std::move(b).finish();
}

}  // namespace spinlattice::model
