#pragma once

// Occupation-number states on small lattices.
//
// Fermionic modes are ordered with every spin-up mode first (ascending site),
// then every spin-down mode (ascending site). A basis state is the product of
// creation operators applied to the vacuum in that mode order, and every
// fermionic sign below is measured against it.
//
// Spinless bosons reuse the spin-up occupation list and leave spin-down empty.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinlattice/linalg.hpp"

namespace spinlattice::fock {

enum class Spin { Up, Down };
enum class Statistics { Fermion, Boson };

constexpr Spin opposite(Spin s) noexcept { return s == Spin::Up ? Spin::Down : Spin::Up; }

class FockState {
 public:
  FockState() = default;
  FockState(std::vector<std::uint8_t> up, std::vector<std::uint8_t> down);

  std::size_t n_sites() const noexcept { return up_.size(); }
  int occupation(std::size_t site, Spin spin) const;
  int site_occupation(std::size_t site) const;
  int n_up() const noexcept;
  int n_down() const noexcept;

  std::span<const std::uint8_t> up() const noexcept { return up_; }
  std::span<const std::uint8_t> down() const noexcept { return down_; }

  // Number of occupied fermionic modes strictly before (site, spin).
  int modes_before(std::size_t site, Spin spin) const;

  FockState with_occupation(std::size_t site, Spin spin, int value) const;

  // Ket notation per site: "|ud,0>" for a doubled left site and empty right
  // site; bosons print their counts.
  std::string to_string() const;

  auto operator<=>(const FockState&) const = default;

 private:
  std::vector<std::uint8_t> up_;
  std::vector<std::uint8_t> down_;
};

struct Sector {
  int n_sites = 0;
  int n_up = 0;
  int n_down = 0;
  Statistics statistics = Statistics::Fermion;

  bool operator==(const Sector&) const = default;
};

// Ordered, indexed list of every state in one particle-number sector.
// States are sorted by decreasing occupation word (up_0..up_{n-1},
// down_0..down_{n-1}), so the leftmost sites fill first.
class Basis {
 public:
  const Sector& sector() const noexcept { return sector_; }
  std::size_t size() const noexcept { return states_.size(); }
  const FockState& operator[](std::size_t i) const { return states_[i]; }
  std::span<const FockState> states() const noexcept { return states_; }
  std::optional<std::size_t> index_of(const FockState& s) const;

  friend Basis enumerate_states(int n_sites, int n_up, int n_down, Statistics statistics);

 private:
  Sector sector_;
  std::vector<FockState> states_;
  std::map<FockState, std::size_t> index_;
};

// Throws Error(InvalidSector) when fermionic counts exceed n_sites, counts are
// negative, or spinless bosons are given spin-down particles.
Basis enumerate_states(int n_sites, int n_up, int n_down, Statistics statistics);

// Closed-form sector dimension, for checks against enumeration.
std::size_t sector_dimension(const Sector& sector);

// Result of applying an operator string to a basis state: the image state
// and its coefficient (a fermionic sign, or a bosonic sqrt factor).
struct Amplitude {
  FockState state;
  double coefficient = 1.0;
};

std::optional<Amplitude> annihilate(const FockState& s, std::size_t site, Spin spin,
                                    Statistics statistics);
std::optional<Amplitude> create(const FockState& s, std::size_t site, Spin spin,
                                Statistics statistics);

/// a+_{to,spin} a_{from,spin}. Empty when the source is empty or a fermionic
/// target is already occupied.
std::optional<Amplitude> apply_hop(const FockState& s, std::size_t from_site, std::size_t to_site,
                                   Spin spin, Statistics statistics);

/// Sum over sigma of a+_{sigma,a} a+_{sigmabar,b} a_{sigma,b} a_{sigmabar,a}:
/// swaps opposite spins between sites a and b. At most one sigma contributes
/// for any given state. Fermions only.
std::optional<Amplitude> apply_exchange(const FockState& s, std::size_t site_a, std::size_t site_b);

/// Relabels sites by `permutation` (site i moves to permutation[i]) and
/// returns the reordering sign of the creation string.
Amplitude apply_site_permutation(const FockState& s, std::span<const std::size_t> permutation);

/// Exchanges every up and down label, with the reordering sign.
Amplitude apply_spin_flip(const FockState& s);

// Dense total-spin-squared operator S^2 = Sz^2 + (S+S- + S-S+)/2 restricted to
// a fermionic sector (S^2 conserves particle numbers).
DenseMatrix spin_squared_matrix(const Basis& basis);

// Spin quantum numbers stored doubled so half-integers stay exact.
struct SpinLabel {
  std::optional<int> twice_s;  // empty means the vector is not an S^2 eigenstate
  int twice_sz = 0;

  bool mixed() const noexcept { return !twice_s.has_value(); }
  double s() const { return 0.5 * twice_s.value(); }
  double sz() const noexcept { return 0.5 * twice_sz; }
  std::string to_string() const;

  bool operator==(const SpinLabel&) const = default;
};

inline constexpr double kSpinEigenTolerance = 1e-9;

/// Labels a normalized vector in `basis` with (S, Sz), or Mixed when
/// ||S^2 v - <S^2> v|| exceeds kSpinEigenTolerance.
/// Throws Error(DimensionMismatch) for a wrong-length vector.
SpinLabel total_spin_label(const Basis& basis, std::span<const double> vector);

// Same, reusing a precomputed spin_squared_matrix(basis).
SpinLabel total_spin_label(const Basis& basis, const DenseMatrix& spin_squared,
                           std::span<const double> vector);

}  // namespace spinlattice::fock
