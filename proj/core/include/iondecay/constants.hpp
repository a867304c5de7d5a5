// constants.hpp — physical constants (SI, CODATA 2018) and numeric helpers

#pragma once

#include <complex>

namespace iondecay {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Reduced Planck constant [J s]
inline constexpr double hbar = 1.054571817e-34;

// Vacuum permittivity [F/m]
inline constexpr double epsilon0 = 8.8541878128e-12;

// Elementary charge [C]
inline constexpr double elementary_charge = 1.602176634e-19;

// Atomic mass unit [kg]
inline constexpr double atomic_mass_unit = 1.66053906660e-27;

using complexd = std::complex<double>;
inline constexpr complexd imag_unit{0.0, 1.0};

}  // namespace iondecay
