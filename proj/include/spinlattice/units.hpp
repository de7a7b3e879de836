#pragma once

namespace spinlattice {

// CODATA 2018 exact/recommended values, SI units.
inline constexpr double kHbarSI = 1.054571817e-34;         // J s
inline constexpr double kVacuumPermittivitySI = 8.8541878128e-12;  // F/m
inline constexpr double kSpeedOfLightSI = 299792458.0;     // m/s (exact)

// Fundamental constants used by the trap formulas. Natural units set all
// three to one so formulas can be checked against hand arithmetic.
struct UnitSystem {
  double hbar;
  double vacuum_permittivity;
  double speed_of_light;

  static constexpr UnitSystem natural() { return {1.0, 1.0, 1.0}; }
  static constexpr UnitSystem physical() {
    return {kHbarSI, kVacuumPermittivitySI, kSpeedOfLightSI};
  }
};

enum class UnitsMode { Natural, Physical };

constexpr UnitSystem unit_system(UnitsMode mode) {
  return mode == UnitsMode::Natural ? UnitSystem::natural() : UnitSystem::physical();
}

}  // namespace spinlattice
