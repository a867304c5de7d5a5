// heuristic.hpp — phenomenological damped-cosine fit for P_down(t)

#pragma once

#include <span>
#include <vector>

#include "iondecay/states.hpp"

namespace iondecay {

struct HeuristicParams {
  std::vector<double> p_dist;  // initial Fock populations, sums to 1
  double rabi = 0.0;           // frequency inside cos(2 rabi t sqrt(n+1)) [rad/s]
  double gamma0 = 0.0;         // base damping rate [1/s]
  double exponent = 0.7;

  void validate() const;
};

// gamma_n = gamma0 (n+1)^exponent.
double gamma_n(const HeuristicParams& p, int n);

// P_down(t) = 1/2 (1 + sum_n p_n cos(2 rabi t sqrt(n+1)) exp(-gamma_n t)).
double p_down_heuristic(const HeuristicParams& p, double t);

// Sampled curve; sigma_z = 1 - 2 p_down, mean_n column is NaN (the fit
// carries no motional observable).
TimeSeries heuristic_series(const HeuristicParams& p, std::span<const double> t_grid);

}  // namespace iondecay
