#include <doctest.h>

#include <cmath>
#include <random>

#include "iondecay/bessel.hpp"
#include "iondecay/constants.hpp"
#include "iondecay/coupling.hpp"

using namespace iondecay;

namespace {

// H2 background against a 9Be+ ion, SI throughout.
GasIonSystem nist_like_system() {
  GasIonSystem sys;
  sys.chi = 0.80e-30;                      // H2 polarizability volume [m^3]
  sys.q = elementary_charge;
  sys.rho_number = 1e12;                   // 1e6 cm^-3
  sys.rho_mass = 1e-9;                     // surface mass density scale [kg/m^2]
  const double m_h2 = 2.016 * atomic_mass_unit;
  const double m_be = 9.012 * atomic_mass_unit;
  sys.reduced_mass = m_h2 * m_be / (m_h2 + m_be);
  sys.rel_velocity = 1.8e3;                // thermal H2 at room temperature
  sys.ion_mass = m_be;
  sys.trap_freq = two_pi * 11.2e6;
  sys.z = 0.5e-6;
  sys.surface = 1e-8;
  return sys;
}

}  // namespace

TEST_CASE("polarization potential") {
  const GasIonSystem sys = nist_like_system();
  const double r = 1e-9;
  const double u1 = polarization_potential(sys, r);
  CHECK(u1 < 0.0);
  CHECK(polarization_potential(sys, 2.0 * r) ==
        doctest::Approx(u1 / 16.0).epsilon(1e-12));

  // independent route: U = -(1/2) alpha_SI E^2 with alpha_SI = 4 pi eps0 chi
  const double field = sys.q / (4.0 * pi * epsilon0 * r * r);
  const double induced = -0.5 * (4.0 * pi * epsilon0 * sys.chi) * field * field;
  CHECK(u1 == doctest::Approx(induced).epsilon(1e-12));

  GasIonSystem faint = sys;
  faint.chi = 1e-60;
  CHECK(std::abs(polarization_potential(faint, r)) <
        std::abs(u1) * 1e-25);

  CHECK_THROWS_AS(polarization_potential(sys, 0.0), DomainError);
}

TEST_CASE("Langevin capture rates") {
  const GasIonSystem sys = nist_like_system();
  const LangevinRates rates = langevin_rates(sys);
  CHECK(rates.impact_param > 0.0);

  // the printed product form and the closed form agree identically
  const double closed =
      sys.rho_number * sys.q * std::sqrt(pi * sys.chi / (epsilon0 * sys.reduced_mass));
  CHECK(rates.reaction_rate == doctest::Approx(closed).epsilon(1e-12));

  // rate constant is velocity independent: p ~ v^{-1/2} cancels in pi p^2 v
  GasIonSystem fast = sys;
  fast.rel_velocity *= 2.0;
  CHECK(langevin_rates(fast).rate_const ==
        doctest::Approx(rates.rate_const).epsilon(1e-12));

  GasIonSystem dense = sys;
  dense.rho_number *= 2.0;
  CHECK(langevin_rates(dense).reaction_rate ==
        doctest::Approx(2.0 * rates.reaction_rate).epsilon(1e-12));

  GasIonSystem sparse = sys;
  sparse.rho_number = 1e-30;
  CHECK(langevin_rates(sparse).reaction_rate < 1e-30);

  // random-system identity sweep
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    GasIonSystem random_sys = sys;
    random_sys.chi *= mag(rng);
    random_sys.reduced_mass *= mag(rng);
    random_sys.rel_velocity *= mag(rng);
    random_sys.rho_number *= mag(rng);
    const LangevinRates r2 = langevin_rates(random_sys);
    const double identity = random_sys.rho_number * random_sys.q *
                            std::sqrt(pi * random_sys.chi /
                                      (epsilon0 * random_sys.reduced_mass));
    CHECK(std::abs(r2.reaction_rate - identity) <= 1e-12 * identity);
  }
}

TEST_CASE("surface-mode Lamb-Dicke scale") {
  const GasIonSystem sys = nist_like_system();
  CHECK(eta_k(0.0, sys) == 0.0);
  CHECK(eta_k(2e6, sys) == doctest::Approx(2.0 * eta_k(1e6, sys)).epsilon(1e-14));

  const double direct =
      1e6 * std::sqrt(hbar / (2.0 * sys.ion_mass * sys.trap_freq));
  CHECK(eta_k(1e6, sys) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(eta_k(1e6, sys) < 0.05);  // deep in the small-excursion regime
}

TEST_CASE("surface coupling strength") {
  const GasIonSystem sys = nist_like_system();
  const DispersionLaw disp{1e-2, 1.5};

  CHECK(coupling_vk(0.0, sys, disp) == 0.0);

  // vanishing limit: V at kz = 1e-6 is far below V at kz = 1
  const double v_tiny = coupling_vk(1e-6 / sys.z, sys, disp);
  const double v_unit = coupling_vk(1.0 / sys.z, sys, disp);
  CHECK(std::abs(v_tiny) <= 1e-5 * std::abs(v_unit));

  // bracket at kz = 1 pins V against the K1 reference value
  const double k = 1.0 / sys.z;
  const double expected = coupling_lambda(sys) * quantization_amplitude(k, sys, disp) /
                          (hbar * sys.z * std::sqrt(sys.surface)) *
                          ((1.0 - 0.6019072302) / sys.z);
  CHECK(coupling_vk(k, sys, disp) == doctest::Approx(expected).epsilon(1e-9));

  // deep sub-wavelength modes: bracket -> 1/z since k K1(k z) dies exponentially
  const double k_big = 50.0 / sys.z;
  const double saturated = coupling_lambda(sys) *
                           quantization_amplitude(k_big, sys, disp) /
                           (hbar * sys.z * sys.z * std::sqrt(sys.surface));
  CHECK(coupling_vk(k_big, sys, disp) ==
        doctest::Approx(saturated).epsilon(1e-10));

  // continuity across the K1 method seam at k z = 2
  const double k_seam = 2.0 / sys.z;
  const double below = coupling_vk(k_seam * (1.0 - 1e-12), sys, disp);
  const double above = coupling_vk(k_seam * (1.0 + 1e-12), sys, disp);
  CHECK(std::abs(below - above) <= 1e-10 * std::abs(above));

  CHECK_THROWS_AS(coupling_vk(-1.0, sys, disp), DomainError);
  CHECK_THROWS_AS(coupling_vk(1.0, sys, DispersionLaw{0.0, 1.5}), DomainError);

  GasIonSystem invalid = sys;
  invalid.z = -1.0;
  CHECK_THROWS_AS(invalid.validate(), DomainError);
}

// Minimal unit-tagged scalar: checks that eta_k * V_k composes to an angular
// frequency when every input carries its SI dimensions.
namespace {

struct Unit {
  double value;
  int m = 0, kg = 0, s = 0, ampere = 0;

  Unit operator*(const Unit& o) const {
    return {value * o.value, m + o.m, kg + o.kg, s + o.s, ampere + o.ampere};
  }
  Unit operator/(const Unit& o) const {
    return {value / o.value, m - o.m, kg - o.kg, s - o.s, ampere - o.ampere};
  }
  Unit operator-(const Unit& o) const {
    REQUIRE(m == o.m);
    REQUIRE(kg == o.kg);
    REQUIRE(s == o.s);
    REQUIRE(ampere == o.ampere);
    return {value - o.value, m, kg, s, ampere};
  }
};

Unit unit_sqrt(const Unit& u) {
  REQUIRE(u.m % 2 == 0);
  REQUIRE(u.kg % 2 == 0);
  REQUIRE(u.s % 2 == 0);
  REQUIRE(u.ampere % 2 == 0);
  return {std::sqrt(u.value), u.m / 2, u.kg / 2, u.s / 2, u.ampere / 2};
}

}  // namespace

TEST_CASE("dimensional audit: eta_k V_k is an angular frequency") {
  const GasIonSystem sys = nist_like_system();
  const DispersionLaw disp_law{1e-2, 1.5};
  const double k_val = 1.0 / sys.z;

  const Unit chi{sys.chi, 3};
  const Unit q{sys.q, 0, 0, 1, 1};
  const Unit rho_n{sys.rho_number, -3};
  const Unit rho_m{sys.rho_mass, -2, 1};
  const Unit eps{epsilon0, -3, -1, 4, 2};
  const Unit planck{hbar, 2, 1, -1};
  const Unit k{k_val, -1};
  const Unit z{sys.z, 1};
  const Unit surf{sys.surface, 2};
  const Unit omega{disp_law.omega(k_val), 0, 0, -1};
  const Unit mass{sys.ion_mass, 0, 1};
  const Unit trap{sys.trap_freq, 0, 0, -1};
  const Unit dimensionless_k1{bessel_k1(k_val * sys.z)};

  const Unit lambda = chi * rho_n * q * q / (Unit{8.0} * eps);     // [J m]
  const Unit amplitude = unit_sqrt(planck / (Unit{2.0} * rho_m * omega));
  const Unit bracket = Unit{1.0} / z - k * dimensionless_k1;
  const Unit vk = lambda * amplitude / (planck * z * unit_sqrt(surf)) * bracket;
  const Unit eta = k * unit_sqrt(planck / (Unit{2.0} * mass * trap));
  const Unit gk = eta * vk;

  CHECK(eta.m == 0);
  CHECK(eta.kg == 0);
  CHECK(eta.s == 0);
  CHECK(gk.m == 0);
  CHECK(gk.kg == 0);
  CHECK(gk.ampere == 0);
  CHECK(gk.s == -1);  // rad/s

  // and the tagged evaluation reproduces the production value
  CHECK(gk.value == doctest::Approx(eta_k(k_val, sys) *
                                    coupling_vk(k_val, sys, disp_law))
                        .epsilon(1e-12));
}
