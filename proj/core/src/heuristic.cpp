#include "iondecay/heuristic.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "iondecay/errors.hpp"

namespace iondecay {

void HeuristicParams::validate() const {
  if (p_dist.empty()) throw DomainError("HeuristicParams: p_dist is empty");
  for (double p : p_dist) {
    if (p < 0.0) throw DomainError("HeuristicParams: p_dist entries must be >= 0");
  }
  const double total = std::accumulate(p_dist.begin(), p_dist.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("HeuristicParams: p_dist must sum to 1");
  }
  if (gamma0 < 0.0) throw DomainError("HeuristicParams: gamma0 must be >= 0");
}

double gamma_n(const HeuristicParams& p, int n) {
  if (n < 0) throw DomainError("gamma_n: n must be >= 0");
  return p.gamma0 * std::pow(n + 1.0, p.exponent);
}

double p_down_heuristic(const HeuristicParams& p, double t) {
  if (t < 0.0) throw DomainError("p_down_heuristic: t must be >= 0");
  double sum = 0.0;
  for (std::size_t n = 0; n < p.p_dist.size(); ++n) {
    if (p.p_dist[n] == 0.0) continue;
    sum += p.p_dist[n] * std::cos(2.0 * p.rabi * t * std::sqrt(n + 1.0)) *
           std::exp(-gamma_n(p, static_cast<int>(n)) * t);
  }
  return 0.5 * (1.0 + sum);
}

TimeSeries heuristic_series(const HeuristicParams& p, std::span<const double> t_grid) {
  p.validate();
  TimeSeries series;
  for (double t : t_grid) {
    const double pd = p_down_heuristic(p, t);
    series.append(t, 1.0 - 2.0 * pd, std::numeric_limits<double>::quiet_NaN());
  }
  return series;
}

}  // namespace iondecay
