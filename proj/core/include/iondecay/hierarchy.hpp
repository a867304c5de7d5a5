// hierarchy.hpp — truncated c-number moment hierarchy for the blue-sideband
// drive with a thermal damping reservoir; yields P_down(t) by direct ODE
// integration

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "iondecay/ode.hpp"
#include "iondecay/states.hpp"

namespace iondecay {

struct HierarchyParams {
  double g = 0.0;      // sideband coupling [rad/s]
  double gamma = 0.0;  // damping constant [1/s]
  double nbar = 0.0;   // reservoir thermal occupation
  int truncation = 4;  // N: highest retained moment order
  int n0 = 0;          // initial Fock number of |n0, down>

  void validate() const;
};

// Moment triples at one instant. P[n] = <(a^dag)^n a^n>, Q[n] = <(a^dag)^n a^n
// sigma_z> for n = 0..N; R[n] is the Hermitian drive cross term for n = 1..N,
// with R[N+1] pinned to zero (the closure) and R[0] unused.
struct HierarchyState {
  double t = 0.0;
  Eigen::VectorXd P;  // size N+1, P[0] == 1 at all times
  Eigen::VectorXd Q;  // size N+1
  Eigen::VectorXd R;  // size N+2

  // Operator-norm bounds: P_0 = 1, P_n >= -tol, |Q_n| <= P_n + tol.
  void validate(double tol = 1e-8) const;
};

struct HierarchyRates {
  Eigen::VectorXd dP;  // dP[0] == 0
  Eigen::VectorXd dQ;
  Eigen::VectorXd dR;  // dR[0] == dR[N+1] == 0
};

// Moments of |n0, down>: P_n is the falling factorial n0!/(n0-n)!, Q = -P,
// R = 0. Throws TruncationTooSmall when truncation < n0 + 1.
HierarchyState init_from_fock(const HierarchyParams& p);

// Right-hand side of the moment system with the R_{N+1} = 0 closure.
HierarchyRates hierarchy_rhs(const HierarchyParams& p, const HierarchyState& s);

// Named low-order shadows: d<sigma_z>/dt and d<a^dag a>/dt.
double d_sigma_z(const HierarchyParams& p, const HierarchyState& s);
double d_mean_n(const HierarchyParams& p, const HierarchyState& s);

struct HierarchyResult {
  TimeSeries series;                      // p_down = (1 - Q_0)/2, mean_n = P_1
  std::vector<HierarchyState> trajectory; // one state per sample
};

// Integrates from |n0, down> over the strictly increasing grid (t_grid[0] = 0).
HierarchyResult integrate_hierarchy(const HierarchyParams& p,
                                    std::span<const double> t_grid,
                                    const OdeOptions& opt = {});

}  // namespace iondecay
