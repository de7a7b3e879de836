#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spinlattice/cluster.hpp"
#include "spinlattice/spectra.hpp"
#include "test_support.hpp"

using namespace spinlattice;
using namespace spinlattice::cluster;
using model::LatticeGraph;

namespace {

model::HamiltonianMatrix plaquette_h(double u, double v, double j) {
  return model::build_juvj(fermion_basis(4, 2, 2), LatticeGraph::ring(4),
                           model::from_dimensionless({u, v, j}));
}

double lowest(const DenseMatrix& m) { return symmetric_eigen(m).values.front(); }

int label_flips(const ScanResult& scan) {
  int flips = 0;
  for (std::size_t k = 1; k < scan.rows.size(); ++k)
    flips += scan.rows[k].label != scan.rows[k - 1].label;
  return flips;
}

}  // namespace

TEST_SUITE("cluster") {
  TEST_CASE("graph names round-trip") {
    for (auto g : {NamedGraph::TwoSite, NamedGraph::PlaquetteRing, NamedGraph::KagomeCell,
                   NamedGraph::KagomeCellFrustrated, NamedGraph::Grid4x4}) {
      CHECK(parse_graph_name(to_string(g)) == std::optional(g));
    }
    CHECK_FALSE(parse_graph_name("triangle").has_value());
    CHECK(make_graph(NamedGraph::KagomeCell).edges().size() == 4);
    CHECK(make_graph(NamedGraph::KagomeCellFrustrated).edges().size() == 5);
    CHECK(make_graph(NamedGraph::Grid4x4).n_sites() == 16);
  }

  TEST_CASE("sixteen-site counts") {
    const auto f = count_cluster_states(16, fock::Statistics::Fermion);
    CHECK(f.sz0_states == 256);
    CHECK(f.polarized_states == 240);
    CHECK(f.singlet_multiplicity == 136);
    CHECK(f.triplet_multiplicity == 120);
    CHECK(count_cluster_states(16, fock::Statistics::Boson).boson_states == 136);
  }

  TEST_CASE("counts agree with brute force and spin multiplicities add up") {
    for (int n : {1, 2, 3, 4, 5, 6, 8}) {
      const auto f = count_cluster_states(n, fock::Statistics::Fermion);
      CHECK(f.sz0_states == oracle::count_fermion_configurations(n, 1, 1));
      CHECK(f.polarized_states == 2 * oracle::count_fermion_configurations(n, 2, 0));
      CHECK(f.singlet_multiplicity + f.triplet_multiplicity == f.sz0_states);
      CHECK(f.singlet_multiplicity == static_cast<std::size_t>(oracle::binomial(n + 1, 2)));
      const auto b = count_cluster_states(n, fock::Statistics::Boson);
      CHECK(b.boson_states == oracle::count_boson_configurations(n, 2));
    }
    const auto two = count_cluster_states(2, fock::Statistics::Fermion);
    CHECK(two.sz0_states + two.polarized_states == 6);
  }

  TEST_CASE("two-site scan reproduces the closed forms") {
    const auto scan = rvb_scan(LatticeGraph::two_site(), "two-site", 3.0, 0.0, 0.5, 51);
    REQUIRE(scan.rows.size() == 51);
    CHECK(scan.rows.front().j == 0.0);
    CHECK(scan.rows.back().j == 0.5);
    for (const auto& row : scan.rows) {
      CHECK(std::abs(row.e_singlet - oracle::singlet_energy(3.0, 0.0, row.j)) < 1e-10);
      CHECK(std::abs(row.e_polarized - oracle::triplet_energy(0.0, row.j)) < 1e-10);
    }
    REQUIRE(scan.crossing);
    CHECK(std::abs(*scan.crossing - spectra::transition_point(3.0, 0.0)) < 1e-8);
    CHECK(scan.sz0_dimension == 4);
    CHECK(scan.singlet_dimension == 3);
    CHECK(scan.polarized_dimension == 1);
  }

  TEST_CASE("plaquette scan end points") {
    const auto scan = rvb_scan(LatticeGraph::ring(4), "plaquette-ring", 3.0, 0.0, 1.5, 31);
    CHECK(scan.rows.front().label == GroundLabel::AFM);
    CHECK(scan.rows.front().e_polarized == doctest::Approx(0.0));
    CHECK(scan.rows.front().e_singlet < 0.0);
    CHECK(scan.rows.back().label == GroundLabel::FM);
    CHECK(scan.sz0_dimension == 36);
    CHECK(scan.polarized_dimension == 1);
  }

  TEST_CASE("the ground label flips at most once on the plaquette") {
    for (double u : {0.5, 1.0, 3.0, 6.0}) {
      const auto scan = rvb_scan(LatticeGraph::ring(4), "plaquette-ring", u, 0.0, 0.6, 61);
      CHECK(label_flips(scan) <= 1);
      // The energy difference changes sign at most once.
      int sign_changes = 0;
      for (std::size_t k = 1; k < scan.rows.size(); ++k) {
        const double a = scan.rows[k - 1].e_singlet - scan.rows[k - 1].e_polarized;
        const double b = scan.rows[k].e_singlet - scan.rows[k].e_polarized;
        sign_changes += (a < 0.0) != (b < 0.0);
      }
      CHECK(sign_changes <= 1);
    }
  }

  TEST_CASE("degenerate rows form one contiguous window") {
    // Any Degenerate rows must sit next to each other.
    for (auto graph : {NamedGraph::TwoSite, NamedGraph::PlaquetteRing, NamedGraph::KagomeCell,
                       NamedGraph::KagomeCellFrustrated}) {
      ScanConfig config;
      config.graph = graph;
      config.steps = 21;
      const auto scan = figure4_dataset(config);
      std::vector<std::size_t> degenerate;
      for (std::size_t k = 0; k < scan.rows.size(); ++k)
        if (scan.rows[k].label == GroundLabel::Degenerate) degenerate.push_back(k);
      if (!degenerate.empty()) CHECK(degenerate.back() - degenerate.front() + 1 == degenerate.size());
    }
  }

  TEST_CASE("scan CSV") {
    ScanConfig config;
    config.steps = 2;
    const auto scan = figure4_dataset(config);
    CHECK(scan.rows.size() == 2);
    const auto csv = format_scan_csv(scan, 12);
    CHECK(csv.rfind("jex_over_4j,e_afm,e_fm,ground\n", 0) == 0);
    CHECK(csv.find("# graph=plaquette-ring") != std::string::npos);
    CHECK(format_scan_csv(figure4_dataset(config), 12) == csv);
  }

  TEST_CASE("scan errors") {
    CHECK_RAISES(rvb_scan(LatticeGraph::ring(4), "r", 3, 0, 0.5, 1), InvalidArgument);
    CHECK_RAISES(rvb_scan(LatticeGraph::ring(4), "r", 3, 0, 0.0, 5), InvalidArgument);
    CHECK_RAISES(rvb_scan(LatticeGraph::ring(4), "r", 3, 0, 0.5, 5, 2, 1), InvalidSector);
    CHECK_RAISES(rvb_scan(LatticeGraph::ring(3), "r", 3, 0, 0.5, 5), InvalidArgument);
    ScanConfig config;
    config.graph = NamedGraph::Grid4x4;
    CHECK_RAISES(figure4_dataset(config), SectorTooLarge);
    // Two particles on the 4x4 grid are small enough.
    config.n_up = 1;
    config.n_down = 1;
    config.steps = 3;
    CHECK(figure4_dataset(config).sz0_dimension == 256);
  }

  TEST_CASE("symmetry group construction") {
    const auto ring = LatticeGraph::ring(4);
    CHECK(SymmetryGroup::dihedral_ring(ring).elements().size() == 8);
    CHECK(SymmetryGroup::trivial(ring).elements().size() == 1);
    CHECK_RAISES(SymmetryGroup(ring, {{0, 0, 1, 2}}), InvalidArgument);
    CHECK_RAISES(SymmetryGroup(ring, {{1, 0, 2, 3}}), InvalidArgument);
    CHECK_RAISES(SymmetryGroup(ring, {{1, 0, 2}}), InvalidArgument);
  }

  TEST_CASE("permutation operators are orthogonal") {
    const auto basis = enumerate_states(4, 2, 2, fock::Statistics::Fermion);
    const auto u = permutation_operator(basis, {1, 2, 3, 0});
    CHECK(max_abs_difference(multiply(transpose(u), u), DenseMatrix::identity(basis.size())) ==
          0.0);
  }

  TEST_CASE("trivial group keeps the whole spectrum") {
    const auto h = plaquette_h(3.0, 0.0, 0.1);
    const auto block = symmetry_reduce(h, SymmetryGroup::trivial(LatticeGraph::ring(4)));
    CHECK(block.block.rows() == h.dimension());
    const auto a = symmetric_eigen(block.block).values;
    const auto b = symmetric_eigen(h.entries).values;
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
  }

  TEST_CASE("two-site swap symmetry") {
    const auto graph = LatticeGraph::two_site();
    const auto basis = fermion_basis(2, 1, 1);
    const auto h = model::build_juvj(basis, graph, model::from_dimensionless({3.0, 0.0, 0.0}));
    const SymmetryGroup swap(graph, {{1, 0}});
    const auto even = symmetry_reduce(h, swap);
    const auto odd = symmetry_reduce(h, swap, std::vector<int>{-1});
    CHECK(even.block.rows() == 2);
    CHECK(odd.block.rows() == 2);
    const auto ground = spectra::eigen_symmetric(h);
    const double parity = symmetry_expectation(*basis, {1, 0}, ground.ground_vector);
    const auto& containing = parity > 0 ? even : odd;
    CHECK(std::abs(std::abs(parity) - 1.0) < 1e-12);
    CHECK(std::abs(lowest(containing.block) - oracle::singlet_energy(3.0, 0.0, 0.0)) < 1e-10);
  }

  TEST_CASE("reduced blocks never undercut the full ground energy") {
    const auto ring = LatticeGraph::ring(4);
    const std::vector<std::vector<Permutation>> groups{
        {{1, 2, 3, 0}, {0, 3, 2, 1}},  // full dihedral group
        {{2, 3, 0, 1}},                // rotation by two sites
        {{1, 0, 3, 2}},                // reflection through bond midpoints
        {{0, 3, 2, 1}},                // reflection through sites 0 and 2
    };
    for (double j : {0.0, 0.05, 0.2}) {
      const auto h = plaquette_h(3.0, 0.0, j);
      const auto full = spectra::eigen_symmetric(h);
      const double e0 = full.eigenvalues.front();
      for (const auto& gens : groups) {
        const SymmetryGroup g(ring, gens);
        const double reduced = lowest(symmetry_reduce(h, g).block);
        CHECK(reduced >= e0 - 1e-10);
        bool even = true;
        for (const auto& p : gens)
          even = even && symmetry_expectation(*h.basis, p, full.ground_vector) > 1.0 - 1e-9;
        if (even) CHECK(std::abs(reduced - e0) < 1e-10);
      }
    }
  }

  TEST_CASE("characters select the ground-state representation") {
    const auto h = plaquette_h(3.0, 0.0, 0.0);
    const auto g = SymmetryGroup::dihedral_ring(LatticeGraph::ring(4));
    const auto full = spectra::eigen_symmetric(h);
    std::vector<int> chars;
    for (const auto& p : g.generators())
      chars.push_back(symmetry_expectation(*h.basis, p, full.ground_vector) > 0 ? 1 : -1);
    const auto block = symmetry_reduce(h, g, chars);
    CHECK(std::abs(lowest(block.block) - full.eigenvalues.front()) < 1e-10);
  }

  TEST_CASE("reduction errors") {
    const auto h = plaquette_h(3.0, 0.0, 0.1);
    const SymmetryGroup relabel(LatticeGraph(4, {}), {{1, 0, 2, 3}});
    CHECK_RAISES(symmetry_reduce(h, relabel), NonCommuting);

    const auto ring = LatticeGraph::ring(4);
    const SymmetryGroup rotations(ring, {{1, 2, 3, 0}, {2, 3, 0, 1}});
    CHECK_RAISES(symmetry_reduce(h, rotations, std::vector<int>{1, -1}), InvalidArgument);
    CHECK_RAISES(symmetry_reduce(h, rotations, std::vector<int>{1}), InvalidArgument);

    // Two up fermions on two sites are odd under the swap.
    const auto graph = LatticeGraph::two_site();
    const auto pol = model::build_juvj(fermion_basis(2, 2, 0), graph, model::from_dimensionless({3, 0, 0}));
    CHECK_RAISES(symmetry_reduce(pol, SymmetryGroup(graph, {{1, 0}})), EmptyBlock);
    CHECK_RAISES(symmetry_reduce(h, SymmetryGroup::trivial(graph)), DimensionMismatch);
  }
}
