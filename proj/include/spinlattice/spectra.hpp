#pragma once

// Exact diagonalization results, the two-site closed forms for the singlet and
// triplet ground energies, their crossing, and the map between couplings and
// the five observable oscillation frequencies of the double well.

#include <optional>
#include <vector>

#include "spinlattice/fock.hpp"
#include "spinlattice/linalg.hpp"
#include "spinlattice/model.hpp"

namespace spinlattice::spectra {

inline constexpr double kTransitionTolerance = 1e-12;
inline constexpr double kFrequencyConsistencyTolerance = 1e-6;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, units of the matrix
  DenseMatrix eigenvectors;         // column k pairs with eigenvalues[k]
  std::vector<double> ground_vector;
  std::optional<fock::SpinLabel> ground_spin;  // empty for bosonic bases
};

/// Full spectrum of a Hamiltonian; labels the ground vector with its total
/// spin when the basis is fermionic. Throws Error(NonSymmetric).
SpectrumResult eigen_symmetric(const model::HamiltonianMatrix& h);

// Orthonormal basis of the S(S+1) eigenspace of S^2 inside a fermionic
// sector. Hamiltonians that conserve total spin can be restricted to it.
class SpinProjector {
 public:
  SpinProjector(const fock::Basis& basis, int twice_s);

  int twice_s() const noexcept { return twice_s_; }
  std::size_t dimension() const noexcept { return columns_.cols(); }
  const DenseMatrix& columns() const noexcept { return columns_; }

  // Q^T H Q. Throws Error(DimensionMismatch) for a foreign basis size and
  // Error(EmptyBlock) when the spin value does not occur in the sector.
  DenseMatrix restrict(const DenseMatrix& h) const;
  double ground_energy(const model::HamiltonianMatrix& h) const;

 private:
  int twice_s_;
  DenseMatrix columns_;
};

// Closed forms in units of J.
double singlet_energy(const model::DimensionlessCouplings& dc);
double triplet_energy(const model::DimensionlessCouplings& dc);

/// Smallest J_ex/4J >= 0 at which the triplet energy reaches the singlet
/// energy, by bisection on the closed forms. Throws Error(NoCrossing) when
/// the triplet is already strictly lower at J_ex = 0.
double transition_point(double u, double v);

/// Root of j^2 + (u - v) j - 1/8 = 0, the equality condition of the two
/// closed forms: (sqrt((u - v)^2 + 1/2) - (u - v)) / 2.
double transition_point_closed_form(double u, double v);

/// The same threshold with the 1/2 outside the radical,
/// (|u - v| + 1/2 - (u + v)) / 2. It is not the crossing of the closed forms
/// and is only reported for comparison.
double transition_point_alternate(double u, double v);

struct FrequencySet {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
  double w5 = 0.0;
  double hbar = 1.0;

  // w4 and w5 go negative when the singlet energy is positive or V < J_ex.
  bool negative_frequency() const noexcept { return w4 < 0.0 || w5 < 0.0; }
};

/// hbar w1,2 = (sqrt(16J^2 + U^2) +- U) / 2
/// hbar w3,4 = 2J [sqrt((u - v - j)^2 + 1) +- (u + v + j)]
/// hbar w5   = V - J_ex
/// Throws Error(ZeroHopping) for J == 0, Error(InvalidArgument) for hbar <= 0.
FrequencySet evolution_frequencies(const model::CouplingSet& c, double hbar);

struct ExtractedCouplings {
  model::CouplingSet couplings;
  double residual = 0.0;  // relative mismatch of hbar (w3 + w4)
};

/// J = hbar sqrt(w1 w2) / 2, U = hbar (w1 - w2),
/// V and J_ex from hbar (w3 - w4) = U + V + J_ex and hbar w5 = V - J_ex.
/// Throws Error(InconsistentFrequencies) when the residual exceeds
/// kFrequencyConsistencyTolerance, Error(InvalidArgument) when w1 < w2.
ExtractedCouplings extract_couplings(const FrequencySet& f);

}  // namespace spinlattice::spectra
