#include <doctest.h>

#include <cmath>

#include "iondecay/carrier.hpp"

using namespace iondecay;

TEST_CASE("phase-space propagator") {
  const CarrierParams p{0.5, 3.0, 1.0};
  CHECK(propagator_u(p, 0.0) == complexd(1.0, 0.0));

  const CarrierParams undamped{0.0, 3.0, 0.0};
  CHECK(std::abs(propagator_u(undamped, pi / 3.0) - complexd(-1.0, 0.0)) <= 1e-12);

  // gamma t = 0.2 with negligible rotation
  const CarrierParams slow{1.0, 1e-12, 1.0};
  CHECK(propagator_u(slow, 0.2).real() == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
  CHECK(std::abs(propagator_u(slow, 0.2)) ==
        doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
}

TEST_CASE("reservoir mode response") {
  const CarrierParams p{0.4, 5.0, 1.0};
  CHECK(coupling_response_vk(p, 2.0, 4.0, 0.0) == complexd(0.0, 0.0));
  CHECK(coupling_response_vk(p, 0.0, 4.0, 1.3) == complexd(0.0, 0.0));

  // resonant undamped limit: v = -gk t e^{-i nu t}
  const double gk = 0.7, t = 2.1;
  const CarrierParams resonant{0.0, 5.0, 0.0};
  const complexd limit = -gk * t * std::exp(complexd(0.0, -resonant.nu * t));
  CHECK(std::abs(coupling_response_vk(resonant, gk, resonant.nu, t) - limit) <= 1e-12);

  // continuity of the removable singularity in gamma
  const CarrierParams near{1e-8, 5.0, 0.0};
  CHECK(std::abs(coupling_response_vk(near, gk, near.nu, t) - limit) <= 1e-7);

  // the series branch agrees with the explicit quotient where both are stable
  const CarrierParams mid{2.0e-5, 5.0, 0.0};
  const double omega_k = 5.0 + 4.0e-5;  // |s t| just under the series switch
  const complexd s_val(0.5 * mid.gamma, -(omega_k - mid.nu));
  const complexd direct = -gk * std::exp(complexd(0.0, -omega_k * t)) *
                          (1.0 - std::exp(-s_val * t)) / s_val;
  CHECK(std::abs(coupling_response_vk(mid, gk, omega_k, t) - direct) <=
        1e-12 * std::abs(direct));
}

TEST_CASE("thermal dispersion") {
  const CarrierParams p{1.0, 2.0, 1.0};
  CHECK(dispersion_D(p, 0.0) == 0.0);
  CHECK(dispersion_D(p, 0.2) == doctest::Approx(1.0 - std::exp(-0.2)).epsilon(1e-12));

  const CarrierParams cold{1.0, 2.0, 0.0};
  CHECK(dispersion_D(cold, 37.0) == 0.0);

  double last = -1.0;
  for (double t = 0.0; t < 5.0; t += 0.1) {
    const double d = dispersion_D(p, t);
    CHECK(d >= last);
    last = d;
  }
  CHECK(dispersion_D(p, 80.0) == doctest::Approx(p.nbar).epsilon(1e-12));
}

TEST_CASE("conditional P pointwise values") {
  const CarrierParams p{1.0, 2.0, 1.0};
  const complexd alpha(1.3, -0.4);
  const GaussianPState s = make_gaussian_pstate(p, alpha, alpha, 0.35);

  CHECK(std::abs(s.u) == doctest::Approx(std::exp(-0.5 * 0.35)).epsilon(1e-12));
  CHECK(s.dispersion == doctest::Approx(dispersion_D(p, 0.35)).epsilon(1e-12));

  const double peak = 1.0 / (pi * s.dispersion);
  CHECK(conditional_P(s, s.u * alpha).real() == doctest::Approx(peak).epsilon(1e-12));

  // one-sigma contour of the vacuum-centered Gaussian
  const GaussianPState vac = make_gaussian_pstate(p, 0.0, 0.0, 0.35);
  const complexd on_sigma(std::sqrt(vac.dispersion), 0.0);
  CHECK(conditional_P(vac, on_sigma).real() ==
        doctest::Approx(std::exp(-1.0) / (pi * vac.dispersion)).epsilon(1e-12));
}

TEST_CASE("conditional P normalizes on a grid") {
  // alpha = 2, gamma t = 0.2, rotation frozen out
  const CarrierParams p{1.0, 1e-9, 1.0};
  const GaussianPState s = make_gaussian_pstate(p, 2.0, 2.0, 0.2);
  const int n = 101;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const complexd gamma_point(-3.0 + 6.0 * i / (n - 1), -3.0 + 6.0 * j / (n - 1));
      sum += conditional_P(s, gamma_point).real();
    }
  }
  sum *= std::pow(6.0 / (n - 1), 2);
  CHECK(std::abs(sum - 1.0) <= 1e-4);
}

TEST_CASE("coherence slice integrates to the state overlap") {
  // for alpha1 != alpha2 the complex distribution still integrates to
  // <alpha1|alpha2>
  const CarrierParams p{1.0, 3.0, 1.0};
  const complexd a1(0.9, 0.3), a2(0.4, -0.5);
  const GaussianPState s = make_gaussian_pstate(p, a1, a2, 0.5);
  const int n = 161;
  const double span = 6.0, h = 2.0 * span / (n - 1);
  complexd sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sum += conditional_P(s, complexd(-span + i * h, -span + j * h));
    }
  }
  sum *= h * h;
  const complexd overlap =
      std::exp(-0.5 * std::norm(a1) - 0.5 * std::norm(a2) + std::conj(a1) * a2);
  CHECK(std::abs(sum - overlap) <= 1e-6);
}

TEST_CASE("degenerate dispersion is refused") {
  const CarrierParams p{1.0, 2.0, 1.0};
  const GaussianPState fresh = make_gaussian_pstate(p, 1.0, 1.0, 0.0);
  CHECK_THROWS_AS(conditional_P(fresh, complexd(0.0, 0.0)), DegenerateDispersion);

  const CarrierParams cold{1.0, 2.0, 0.0};
  CHECK_THROWS_AS(pgrid(cold, 1.0, 2.0), DegenerateDispersion);
}

TEST_CASE("mean excitation closed form") {
  const CarrierParams p{1.0, 2.0, 1.0};
  CHECK(mean_excitation(p, 0.0, 0.0) == 0.0);
  CHECK(mean_excitation(p, 0.0, 40.0) == doctest::Approx(1.0).epsilon(1e-12));

  const CarrierParams undamped{0.0, 2.0, 0.0};
  for (double t : {0.0, 0.7, 3.0}) {
    CHECK(mean_excitation(undamped, 2.0, t) == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("sampled grid reproduces the Gaussian moments") {
  const CarrierParams p{1.0, 10.0, 1.0};
  const complexd alpha(2.0, 0.0);
  for (double t : {0.2, 0.9}) {
    const PGrid grid = pgrid(p, alpha, t);
    CHECK(grid.values.minCoeff() >= 0.0);
    CHECK(grid.mass() == doctest::Approx(1.0).epsilon(1e-6));

    const complexd center = propagator_u(p, t) * alpha;
    CHECK(std::abs(grid.mean() - center) <= 1e-6 + grid.spec.cell_area());
    CHECK(std::abs(grid.central_second_moment() - dispersion_D(p, t)) <= 1e-3);
  }

  // late-time thermal fixed point
  const PGrid late = pgrid(p, alpha, 30.0);
  CHECK(std::abs(late.mean()) <= 1e-6);
  CHECK(late.central_second_moment() == doctest::Approx(p.nbar).epsilon(1e-3));

  // vacuum start: grid second moment tracks the dispersion
  const PGrid vac = pgrid(p, 0.0, 0.7);
  CHECK(std::abs(vac.central_second_moment() - dispersion_D(p, 0.7)) <= 1e-3);
}

TEST_CASE("carrier parameter validation") {
  CHECK_THROWS_AS(propagator_u(CarrierParams{-1.0, 2.0, 1.0}, 0.1), DomainError);
  CHECK_THROWS_AS(propagator_u(CarrierParams{1.0, 0.0, 1.0}, 0.1), DomainError);
  CHECK_THROWS_AS(dispersion_D(CarrierParams{1.0, 2.0, -0.5}, 0.1), DomainError);
  CHECK_THROWS_AS(dispersion_D(CarrierParams{1.0, 2.0, 0.5}, -0.1), DomainError);
}
