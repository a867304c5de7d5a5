#include <doctest.h>

#include <cmath>
#include <vector>

#include "iondecay/envelope.hpp"
#include "iondecay/heuristic.hpp"

using namespace iondecay;

TEST_CASE("phenomenological damping rates") {
  HeuristicParams p{{1.0}, 1.0, 11.9e3, 0.7};
  CHECK(gamma_n(p, 0) == p.gamma0);
  CHECK(gamma_n(p, 1) == doctest::Approx(11.9e3 * std::pow(2.0, 0.7)).epsilon(1e-14));
  CHECK(gamma_n(p, 1) == doctest::Approx(19331.6).epsilon(1e-4));

  HeuristicParams flat = p;
  flat.exponent = 0.0;
  for (int n : {0, 3, 9}) CHECK(gamma_n(flat, n) == flat.gamma0);
}

TEST_CASE("heuristic fluorescence curve") {
  HeuristicParams p{{1.0}, 2.0, 0.0, 0.7};
  CHECK(p_down_heuristic(p, 0.0) == 1.0);

  // single undamped term is a pure cosine
  for (double t : {0.1, 0.7, 2.3}) {
    CHECK(p_down_heuristic(p, t) ==
          doctest::Approx(0.5 * (1.0 + std::cos(2.0 * p.rabi * t))).epsilon(1e-14));
  }

  HeuristicParams damped{{0.3, 0.7}, 2.0, 0.8, 0.7};
  CHECK(p_down_heuristic(damped, 0.0) == 1.0);
  CHECK(p_down_heuristic(damped, 1e4) == doctest::Approx(0.5).epsilon(1e-9));
  for (double t = 0.0; t < 10.0; t += 0.37) {
    const double value = p_down_heuristic(damped, t);
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HeuristicParams({}, 1.0, 1.0, 0.7).validate(), DomainError);
  CHECK_THROWS_AS(HeuristicParams({0.4, 0.4}, 1.0, 1.0, 0.7).validate(), DomainError);
  CHECK_THROWS_AS(HeuristicParams({-0.2, 1.2}, 1.0, 1.0, 0.7).validate(), DomainError);
  CHECK_THROWS_AS(HeuristicParams({1.0}, 1.0, -1.0, 0.7).validate(), DomainError);
  CHECK_THROWS_AS(p_down_heuristic(HeuristicParams{{1.0}, 1.0, 1.0, 0.7}, -0.1),
                  DomainError);
}

TEST_CASE("the fit decays with a symmetric envelope") {
  // single Fock component: the peak of each flop equals the envelope at the
  // cosine contact time, and the midline never drifts off one half
  HeuristicParams p{{0.0, 1.0}, 1.0, 1e-3, 0.7};
  const double omega = 2.0 * p.rabi * std::sqrt(2.0);
  const double period = two_pi / omega;

  std::vector<double> grid;
  const int per_period = 4000, n_periods = 8;
  for (int i = 0; i <= per_period * n_periods; ++i) {
    grid.push_back(i * period / per_period);
  }
  const TimeSeries series = heuristic_series(p, grid);

  for (int cycle = 1; cycle < n_periods; ++cycle) {
    const double t_contact = cycle * period;
    double peak = 0.0;
    for (int i = (cycle * per_period) - per_period / 2;
         i <= (cycle * per_period) + per_period / 2; ++i) {
      peak = std::max(peak, series.p_down[i] - 0.5);
    }
    const double envelope = 0.5 * std::exp(-gamma_n(p, 1) * t_contact);
    CHECK(std::abs(peak - envelope) <= 1e-6);
  }

  CHECK(envelope_asymmetry(series) <= 1e-6);
}
