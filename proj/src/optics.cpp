#include "spinlattice/optics.hpp"

#include <cmath>
#include <numbers>

#include "spinlattice/error.hpp"

namespace spinlattice::optics {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

void DipoleField::validate() const {
  require(intensity >= 0.0, "intensity must be nonnegative");
  require(laser_frequency > 0.0, "laser_frequency must be positive");
  require(transition_frequency > 0.0, "transition_frequency must be positive");
}

void LatticeParams::validate() const {
  require(v1 >= 0.0 && v2 >= 0.0, "lattice depths must be nonnegative");
  require(d > 0.0, "lattice period d must be positive");
  require(mass > 0.0, "mass must be positive");
  require(wavelength > 0.0, "wavelength must be positive");
  require(std::isfinite(phase), "phase must be finite");
}

void Species::validate() const {
  require(protons >= 1, "protons must be at least 1");
  require(neutrons >= 0, "neutrons must be nonnegative");
  require(electrons >= 1, "electrons must be at least 1");
  require(protons == electrons, "neutral atom requires protons == electrons");
}

std::string_view to_string(Detuning d) noexcept {
  switch (d) {
    case Detuning::Red: return "red";
    case Detuning::Blue: return "blue";
    case Detuning::Resonant: return "resonant";
  }
  return "unknown";
}

std::string_view to_string(Statistics s) noexcept {
  return s == Statistics::Boson ? "boson" : "fermion";
}

double dipole_potential(const DipoleField& field, const UnitSystem& units) {
  field.validate();
  return -field.polarizability_re * field.intensity /
         (2.0 * units.vacuum_permittivity * units.speed_of_light);
}

Detuning detuning_class(const DipoleField& field) {
  field.validate();
  const double detuning = field.laser_frequency - field.transition_frequency;
  if (detuning < 0.0) return Detuning::Red;
  if (detuning > 0.0) return Detuning::Blue;
  return Detuning::Resonant;
}

double superlattice_potential(double x, const LatticeParams& p) {
  p.validate();
  using std::numbers::pi;
  const double long_arm = std::cos(pi * x / p.d + p.phase);
  const double short_arm = std::cos(2.0 * pi * x / p.d);
  return p.v1 * long_arm * long_arm + p.v2 * short_arm * short_arm;
}

double recoil_energy(double mass, double wavelength, const UnitSystem& units) {
  require(mass > 0.0, "mass must be positive");
  require(wavelength > 0.0, "wavelength must be positive");
  return units.hbar * units.hbar / (2.0 * mass * wavelength * wavelength);
}

double josephson_frequency(const LatticeParams& p, const UnitSystem& units) {
  p.validate();
  if (p.v2 == 0.0) {
    throw Error(ErrorCode::DomainError, "josephson frequency needs a nonzero short-lattice depth");
  }
  const double recoil = recoil_energy(p.mass, p.wavelength, units);
  const double long_depth = p.v1 * recoil;
  const double short_depth = p.v2 * recoil;
  // 16 V2^2 and V1^2 are formed so that v1 == 4 v2 cancels exactly.
  const double radicand_numerator = 16.0 * short_depth * short_depth - long_depth * long_depth;
  if (radicand_numerator < 0.0) {
    throw Error(ErrorCode::DomainError, "josephson frequency is imaginary for v1 > 4 v2");
  }
  return std::numbers::pi / p.d * std::sqrt(radicand_numerator / (2.0 * p.mass * short_depth));
}

bool is_effective_double_well(const LatticeParams& p) {
  p.validate();
  return p.v1 > 4.0 * p.v2;
}

Statistics classify_species(const Species& s) {
  s.validate();
  return (s.protons + s.neutrons + s.electrons) % 2 == 0 ? Statistics::Boson
                                                         : Statistics::Fermion;
}

}  // namespace spinlattice::optics
