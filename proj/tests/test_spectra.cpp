#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinlattice/spectra.hpp"
#include "test_support.hpp"

using namespace spinlattice;
using namespace spinlattice::spectra;
using model::CouplingSet;
using model::DimensionlessCouplings;
using model::LatticeGraph;

namespace {

struct TwoSiteLevels {
  double singlet;      // S = 0 ground inside Sz = 0
  double sz0_minimum;  // plain lowest eigenvalue of the Sz = 0 block
  double polarized;
};

TwoSiteLevels two_site_levels(double u, double v, double j) {
  const auto c = model::from_dimensionless({u, v, j});
  const auto sz0 = fermion_basis(2, 1, 1);
  const auto h = model::build_juvj(sz0, LatticeGraph::two_site(), c);
  const auto pol = model::build_juvj(fermion_basis(2, 2, 0), LatticeGraph::two_site(), c);
  return {SpinProjector(*sz0, 0).ground_energy(h), eigen_symmetric(h).eigenvalues.front(),
          eigen_symmetric(pol).eigenvalues.front()};
}

double relative_coupling_error(const CouplingSet& got, const CouplingSet& want) {
  return std::max({oracle::relative_error(got.hop_j, want.hop_j),
                   oracle::relative_error(got.onsite_u, want.onsite_u),
                   oracle::relative_error(got.intersite_v, want.intersite_v),
                   oracle::relative_error(got.superexchange_jex, want.superexchange_jex)});
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("spectrum result is normalized, sorted and spin-labelled") {
    const auto c = model::from_dimensionless({3.0, 0.0, 0.0});
    const auto h = model::build_juvj(fermion_basis(2, 1, 1), LatticeGraph::two_site(), c);
    const auto r = eigen_symmetric(h);
    CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    CHECK(std::abs(norm(r.ground_vector) - 1.0) < 1e-12);
    REQUIRE(r.ground_spin);
    CHECK(*r.ground_spin == fock::SpinLabel{0, 0});
  }

  TEST_CASE("closed-form examples") {
    CHECK(singlet_energy({0, 0, 0}) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(singlet_energy({3, 0, 0}) == doctest::Approx(-2.0 * (std::sqrt(10.0) - 3.0)));
    CHECK(singlet_energy({3, 0, 0}) == doctest::Approx(-0.32455532).epsilon(1e-8));
    CHECK(singlet_energy({50, 0, 0}) == doctest::Approx(-0.02).epsilon(0.01));
    CHECK(triplet_energy({7, 0, 0}) == 0.0);
    CHECK(triplet_energy({1, 0.3, 0.3}) == 0.0);
    CHECK(triplet_energy({2, 1, 0.25}) == 3.0);
  }

  TEST_CASE("two-site ED matches the closed forms on the reference grid") {
    double worst_singlet = 0.0, worst_triplet = 0.0, worst_minimum = 0.0;
    int points = 0;
    for (int iu = 0; iu <= 10; ++iu) {
      for (int iv = 0; iv <= 5; ++iv) {
        for (int ij = 0; ij <= 10; ++ij) {
          const double u = 0.5 * iu, v = 0.5 * iv, j = 0.1 * ij;
          const auto levels = two_site_levels(u, v, j);
          const double es = oracle::singlet_energy(u, v, j);
          const double et = oracle::triplet_energy(v, j);
          worst_singlet = std::max(worst_singlet, std::abs(levels.singlet - es));
          worst_triplet = std::max(worst_triplet, std::abs(levels.polarized - et));
          worst_minimum = std::max(worst_minimum, std::abs(levels.sz0_minimum - std::min(es, et)));
          ++points;
        }
      }
    }
    CHECK(points == 726);
    CHECK(worst_singlet < 1e-10);
    CHECK(worst_triplet < 1e-12);
    CHECK(worst_minimum < 1e-10);
  }

  TEST_CASE("closed forms are monotone in j") {
    for (double u : {0.0, 1.0, 3.0}) {
      for (double v : {0.0, 0.5}) {
        double prev_s = singlet_energy({u, v, 0.0});
        double prev_t = triplet_energy({u, v, 0.0});
        for (int k = 1; k <= 200; ++k) {
          const double j = 0.01 * k;
          CHECK(singlet_energy({u, v, j}) >= prev_s);
          CHECK(triplet_energy({u, v, j}) < prev_t);
          prev_s = singlet_energy({u, v, j});
          prev_t = triplet_energy({u, v, j});
        }
      }
    }
  }

  TEST_CASE("transition point") {
    CHECK(std::abs(transition_point(3.0, 0.0) - 0.04110353) < 1e-6);
    CHECK(std::abs(transition_point(3.0, 0.0) - 0.5 * (std::sqrt(9.5) - 3.0)) < 1e-10);
    CHECK(std::abs(transition_point(1.2, 1.2) - 0.5 * std::sqrt(0.5)) < 1e-10);
    CHECK(transition_point_alternate(3.0, 0.0) == doctest::Approx(0.25));

    double previous = transition_point(0.0, 0.0);
    for (double gap : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
      const double now = transition_point(gap, 0.0);
      CHECK(now < previous);
      CHECK(now > 0.0);
      previous = now;
    }
  }

  TEST_CASE("transition point is where the closed forms meet") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(0.0, 6.0);
    for (int k = 0; k < 100; ++k) {
      double u = dist(rng), v = dist(rng);
      if (u < v) std::swap(u, v);
      const double jc = transition_point(u, v);
      CHECK(std::abs(jc - transition_point_closed_form(u, v)) < 1e-10);
      CHECK(std::abs(oracle::singlet_energy(u, v, jc) - oracle::triplet_energy(v, jc)) < 1e-9);
    }
  }

  TEST_CASE("spin projector") {
    const auto basis = fermion_basis(2, 1, 1);
    CHECK(SpinProjector(*basis, 0).dimension() == 3);
    CHECK(SpinProjector(*basis, 2).dimension() == 1);
    CHECK_RAISES(SpinProjector(*basis, 4).restrict(DenseMatrix(4, 4)), EmptyBlock);
    CHECK_RAISES(SpinProjector(*basis, 0).restrict(DenseMatrix(3, 3)), DimensionMismatch);
  }

  TEST_CASE("frequency identities") {
    const auto f0 = evolution_frequencies({1.5, 0.0, 0.0, 0.0, 0.0}, 1.0);
    CHECK(f0.w1 == doctest::Approx(3.0));
    CHECK(f0.w2 == doctest::Approx(3.0));

    const CouplingSet c{1.3, 7.0, 1.1, 0.4, 0.0};
    for (double hbar : {1.0, 0.5}) {
      const auto f = evolution_frequencies(c, hbar);
      CHECK(hbar * hbar * f.w1 * f.w2 == doctest::Approx(4.0 * 1.3 * 1.3).epsilon(1e-14));
      CHECK(hbar * (f.w3 - f.w4) == doctest::Approx(7.0 + 1.1 + 0.4).epsilon(1e-14));
      CHECK(hbar * f.w5 == doctest::Approx(1.1 - 0.4).epsilon(1e-14));
      CHECK(f.w1 >= f.w2);
      CHECK(f.w3 >= f.w4);
    }

    // hbar w5 equals the polarized-sector eigenvalue in raw energy units.
    const auto pol = model::build_juvj(fermion_basis(2, 2, 0), LatticeGraph::two_site(), c);
    CHECK(evolution_frequencies(c, 1.0).w5 ==
          doctest::Approx(pol.entries(0, 0) * pol.energy_unit).epsilon(1e-14));

    CHECK(evolution_frequencies({1.0, 2.0, 0.1, 0.5, 0.0}, 1.0).negative_frequency());
    CHECK_RAISES(evolution_frequencies({0.0, 1.0, 0.0, 0.0, 0.0}, 1.0), ZeroHopping);
    CHECK_RAISES(evolution_frequencies({1.0, 1.0, 0.0, 0.0, 0.0}, 0.0), InvalidArgument);
  }

  TEST_CASE("frequency round trip") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> jd(0.1, 5.0), ud(0.0, 20.0), vd(0.0, 5.0), xd(0.0, 2.0);
    double worst = 0.0, worst_residual = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const CouplingSet c{jd(rng), ud(rng), vd(rng), xd(rng), 0.0};
      const auto back = extract_couplings(evolution_frequencies(c, 1.0));
      worst = std::max(worst, relative_coupling_error(back.couplings, c));
      worst_residual = std::max(worst_residual, back.residual);
    }
    CHECK(worst < 1e-10);
    CHECK(worst_residual < 1e-12);
  }

  TEST_CASE("degenerate hopping frequencies") {
    const CouplingSet c{0.8, 0.0, 0.3, 0.1, 0.0};
    auto f = evolution_frequencies(c, 2.0);
    CHECK(f.w1 == f.w2);
    const auto back = extract_couplings(f);
    CHECK(back.couplings.onsite_u == 0.0);
    CHECK(back.couplings.hop_j == doctest::Approx(2.0 * f.w1 / 2.0).epsilon(1e-14));
  }

  TEST_CASE("inconsistent or disordered frequencies") {
    auto f = evolution_frequencies({1.0, 4.0, 0.5, 0.2, 0.0}, 1.0);
    auto bad = f;
    bad.w3 *= 1.1;
    CHECK_RAISES(extract_couplings(bad), InconsistentFrequencies);
    auto swapped = f;
    std::swap(swapped.w1, swapped.w2);
    CHECK_RAISES(extract_couplings(swapped), InvalidArgument);
  }
}
