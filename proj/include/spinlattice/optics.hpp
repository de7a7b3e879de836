#pragma once

// Trap-level quantities for atoms in a one-dimensional optical superlattice.

#include <string_view>

#include "spinlattice/units.hpp"

namespace spinlattice::optics {

struct DipoleField {
  double intensity;             // W per area, >= 0
  double polarizability_re;     // Re(alpha), volume-scaled
  double laser_frequency;       // rad/s, > 0
  double transition_frequency;  // rad/s, > 0

  // Throws Error(InvalidArgument) when an invariant is violated.
  void validate() const;
};

// Long lattice of period d superimposed on a short lattice of period d/2.
// Depths are in recoil-energy units of the short lattice.
struct LatticeParams {
  double v1 = 0.0;          // long-lattice depth
  double v2 = 0.0;          // short-lattice depth
  double d = 1.0;           // long-lattice period
  double phase = 0.0;       // relative phase of the long lattice, radians
  double mass = 1.0;
  double wavelength = 1.0;  // short-lattice wavelength

  void validate() const;
};

struct Species {
  int protons = 1;
  int neutrons = 0;
  int electrons = 1;

  // Neutral atoms only: protons must equal electrons.
  void validate() const;
};

enum class Detuning { Red, Blue, Resonant };
enum class Statistics { Boson, Fermion };

std::string_view to_string(Detuning d) noexcept;
std::string_view to_string(Statistics s) noexcept;

/// Dipole potential -Re(alpha) I / (2 eps0 c).
double dipole_potential(const DipoleField& field, const UnitSystem& units);

/// Sign of laser minus transition frequency. Resonant is outside the
/// far-detuned trap model but is still a valid answer.
Detuning detuning_class(const DipoleField& field);

/// v1 cos^2(pi x / d + phase) + v2 cos^2(2 pi x / d), in recoil units.
double superlattice_potential(double x, const LatticeParams& p);

/// E_r = hbar^2 / (2 m lambda^2). Note the absence of the (2 pi)^2 factor
/// carried by the more common hbar^2 k^2 / 2m definition.
double recoil_energy(double mass, double wavelength, const UnitSystem& units);

/// Josephson oscillation frequency (pi/d) sqrt((16 V2^2 - V1^2) / (2 m V2)),
/// with depths converted to absolute energy through recoil_energy.
/// Throws Error(DomainError) when v2 == 0 or the radicand is negative.
double josephson_frequency(const LatticeParams& p, const UnitSystem& units);

/// True when v1 > 4 v2.
bool is_effective_double_well(const LatticeParams& p);

Statistics classify_species(const Species& s);

}  // namespace spinlattice::optics
