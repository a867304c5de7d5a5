#include "iondecay/coupling.hpp"

#include "iondecay/bessel.hpp"
#include "iondecay/constants.hpp"

namespace iondecay {

void GasIonSystem::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("GasIonSystem: ") + name + " must be > 0");
    }
  };
  positive(chi, "chi");
  positive(q, "q");
  positive(rho_number, "rho_number");
  positive(rho_mass, "rho_mass");
  positive(reduced_mass, "reduced_mass");
  positive(rel_velocity, "rel_velocity");
  positive(ion_mass, "ion_mass");
  positive(trap_freq, "trap_freq");
  positive(z, "z");
  positive(surface, "surface");
}

double polarization_potential(const GasIonSystem& sys, double r) {
  if (!(r > 0.0)) throw DomainError("polarization_potential: r must be > 0");
  return -sys.chi * sys.q * sys.q / (8.0 * pi * epsilon0 * r * r * r * r);
}

LangevinRates langevin_rates(const GasIonSystem& sys) {
  const double v2 = sys.rel_velocity * sys.rel_velocity;
  const double impact = std::pow(
      sys.chi * sys.q * sys.q / (pi * epsilon0 * sys.reduced_mass * v2), 0.25);
  const double rate_const = pi * impact * impact * sys.rel_velocity;
  return {impact, rate_const, sys.rho_number * rate_const};
}

double eta_k(double k, const GasIonSystem& sys) {
  if (k < 0.0) throw DomainError("eta_k: k must be >= 0");
  return k * std::sqrt(hbar / (2.0 * sys.ion_mass * sys.trap_freq));
}

double coupling_lambda(const GasIonSystem& sys) {
  return sys.chi * sys.rho_number * sys.q * sys.q / (8.0 * epsilon0);
}

double quantization_amplitude(double k, const GasIonSystem& sys,
                              const DispersionLaw& disp) {
  if (!(k > 0.0)) throw DomainError("quantization_amplitude: k must be > 0");
  return std::sqrt(hbar / (2.0 * sys.rho_mass * disp.omega(k)));
}

double coupling_vk(double k, const GasIonSystem& sys, const DispersionLaw& disp) {
  if (!(sys.z > 0.0)) throw DomainError("coupling_vk: z must be > 0");
  if (k < 0.0) throw DomainError("coupling_vk: k must be >= 0");
  if (k == 0.0) return 0.0;  // bracket vanishes: k K1(k z) -> 1/z

  const double bracket = 1.0 / sys.z - k * bessel_k1(k * sys.z);
  return coupling_lambda(sys) * quantization_amplitude(k, sys, disp) /
         (hbar * sys.z * std::sqrt(sys.surface)) * bracket;
}

}  // namespace iondecay
