// coupling.hpp — polarization collision estimates and the quantized
// surface-oscillation coupling strength

#pragma once

#include <cmath>

#include "iondecay/errors.hpp"

namespace iondecay {

// Ion plus background-gas parameters, all SI.
struct GasIonSystem {
  double chi = 0.0;           // polarizability volume [m^3]
  double q = 0.0;             // ion charge [C]
  double rho_number = 0.0;    // gas number density [1/m^3]
  double rho_mass = 0.0;      // surface mass density entering quantization [kg/m^2]
  double reduced_mass = 0.0;  // collision pair reduced mass [kg]
  double rel_velocity = 0.0;  // relative velocity [m/s]
  double ion_mass = 0.0;      // trapped-ion mass [kg]
  double trap_freq = 0.0;     // trap frequency [rad/s]
  double z = 0.0;             // mean ion-surface distance [m]
  double surface = 0.0;       // surface area [m^2]

  void validate() const;
};

// Power-law surface dispersion omega(k) = amplitude * k^exponent. The
// amplitude has no physical default and must be supplied.
struct DispersionLaw {
  double amplitude = 0.0;
  double exponent = 1.5;  // capillary-like default

  double omega(double k) const {
    if (amplitude <= 0.0) throw DomainError("DispersionLaw: amplitude must be > 0");
    return amplitude * std::pow(k, exponent);
  }
};

struct LangevinRates {
  double impact_param;   // critical impact parameter [m]
  double rate_const;     // Langevin rate constant [m^3/s]
  double reaction_rate;  // [1/s]
};

// Attractive induced-dipole potential U(r) = -chi q^2 / (8 pi eps0 r^4) [J].
double polarization_potential(const GasIonSystem& sys, double r);

// Critical impact parameter, Langevin rate constant, and reaction rate for
// spiraling capture collisions.
LangevinRates langevin_rates(const GasIonSystem& sys);

// Lamb-Dicke-like parameter of a surface mode: k sqrt(hbar / (2 m nu)).
double eta_k(double k, const GasIonSystem& sys);

// Lambda = chi rho_number q^2 / (8 eps0) [J m], the polarization coupling
// scale of the surface interaction.
double coupling_lambda(const GasIonSystem& sys);

// Zero-point quantization amplitude C_k = sqrt(hbar / (2 rho_mass omega(k))).
double quantization_amplitude(double k, const GasIonSystem& sys,
                              const DispersionLaw& disp);

// Coupling strength of surface mode k as an angular frequency [rad/s]:
//   V_k = Lambda C_k / (hbar z sqrt(S)) * [1/z - k K1(k z)].
// Vanishes at k = 0 and decays with the bracket -> 1/z as k -> infinity.
double coupling_vk(double k, const GasIonSystem& sys, const DispersionLaw& disp);

}  // namespace iondecay
