#include "iondecay/hierarchy.hpp"

#include <cmath>

#include "iondecay/errors.hpp"

namespace iondecay {

void HierarchyParams::validate() const {
  if (!std::isfinite(g) || !std::isfinite(gamma) || !std::isfinite(nbar)) {
    throw DomainError("HierarchyParams: rates must be finite");
  }
  if (gamma < 0.0) throw DomainError("HierarchyParams: gamma must be >= 0");
  if (nbar < 0.0) throw DomainError("HierarchyParams: nbar must be >= 0");
  if (n0 < 0) throw DomainError("HierarchyParams: n0 must be >= 0");
  if (truncation < 1) throw DomainError("HierarchyParams: truncation must be >= 1");
  if (truncation < n0 + 1) {
    throw TruncationTooSmall("HierarchyParams: truncation must be >= n0 + 1");
  }
}

void HierarchyState::validate(double tol) const {
  if (P[0] != 1.0) throw NumericError("HierarchyState: P_0 drifted from one");
  for (Eigen::Index n = 0; n < P.size(); ++n) {
    if (P[n] < -tol) throw NumericError("HierarchyState: negative moment");
    if (std::abs(Q[n]) > P[n] + tol) {
      throw NumericError("HierarchyState: |Q_n| exceeds P_n");
    }
  }
}

HierarchyState init_from_fock(const HierarchyParams& p) {
  p.validate();
  const int n_top = p.truncation;
  HierarchyState s;
  s.t = 0.0;
  s.P = Eigen::VectorXd::Zero(n_top + 1);
  s.Q = Eigen::VectorXd::Zero(n_top + 1);
  s.R = Eigen::VectorXd::Zero(n_top + 2);
  double falling = 1.0;
  for (int n = 0; n <= n_top; ++n) {
    if (n > 0) falling *= static_cast<double>(p.n0 - n + 1);
    if (n > p.n0) falling = 0.0;
    s.P[n] = falling;
    s.Q[n] = -falling;  // sigma_z eigenvalue -1 on |down>
  }
  return s;
}

HierarchyRates hierarchy_rhs(const HierarchyParams& p, const HierarchyState& s) {
  const int n_top = p.truncation;
  const double g = p.g;
  const double gam = p.gamma;
  const double heat = p.gamma * p.nbar;

  HierarchyRates r;
  r.dP = Eigen::VectorXd::Zero(n_top + 1);
  r.dQ = Eigen::VectorXd::Zero(n_top + 1);
  r.dR = Eigen::VectorXd::Zero(n_top + 2);

  r.dQ[0] = 2.0 * g * s.R[1];
  for (int n = 1; n <= n_top; ++n) {
    const double dn = static_cast<double>(n);
    r.dP[n] = dn * g * s.R[n] - dn * gam * s.P[n] + dn * dn * heat * s.P[n - 1];
    r.dQ[n] = dn * g * s.R[n] + 2.0 * g * s.R[n + 1] - dn * gam * s.Q[n] +
              dn * dn * heat * s.Q[n - 1];
    r.dR[n] = -2.0 * g * s.Q[n] + dn * g * s.P[n - 1] - dn * g * s.Q[n - 1] -
              (dn - 0.5) * gam * s.R[n] + dn * (dn - 1.0) * heat * s.R[n - 1];
  }
  return r;
}

double d_sigma_z(const HierarchyParams& p, const HierarchyState& s) {
  return 2.0 * p.g * s.R[1];
}

double d_mean_n(const HierarchyParams& p, const HierarchyState& s) {
  return p.g * s.R[1] - p.gamma * s.P[1] + p.gamma * p.nbar;
}

namespace {

// Packed layout: [Q_0..Q_N, P_1..P_N, R_1..R_N]. P_0 stays exactly one and
// R_{N+1} exactly zero by never entering the integrator.
struct Packing {
  int n_top;
  int size() const { return 3 * n_top + 1; }
  int q(int n) const { return n; }
  int p(int n) const { return n_top + n; }          // n >= 1
  int r(int n) const { return 2 * n_top + n; }      // n >= 1
};

Eigen::VectorXd pack(const Packing& pk, const HierarchyState& s) {
  Eigen::VectorXd y(pk.size());
  for (int n = 0; n <= pk.n_top; ++n) y[pk.q(n)] = s.Q[n];
  for (int n = 1; n <= pk.n_top; ++n) y[pk.p(n)] = s.P[n];
  for (int n = 1; n <= pk.n_top; ++n) y[pk.r(n)] = s.R[n];
  return y;
}

HierarchyState unpack(const Packing& pk, double t, const Eigen::VectorXd& y) {
  HierarchyState s;
  s.t = t;
  s.P = Eigen::VectorXd::Zero(pk.n_top + 1);
  s.Q = Eigen::VectorXd::Zero(pk.n_top + 1);
  s.R = Eigen::VectorXd::Zero(pk.n_top + 2);
  s.P[0] = 1.0;
  for (int n = 0; n <= pk.n_top; ++n) s.Q[n] = y[pk.q(n)];
  for (int n = 1; n <= pk.n_top; ++n) s.P[n] = y[pk.p(n)];
  for (int n = 1; n <= pk.n_top; ++n) s.R[n] = y[pk.r(n)];
  return s;
}

}  // namespace

HierarchyResult integrate_hierarchy(const HierarchyParams& p,
                                    std::span<const double> t_grid,
                                    const OdeOptions& opt) {
  p.validate();
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw DomainError("integrate_hierarchy: t_grid must start at 0");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (t_grid[i] <= t_grid[i - 1]) {
      throw DomainError("integrate_hierarchy: t_grid must be strictly increasing");
    }
  }

  const Packing pk{p.truncation};
  const double g = p.g;
  const double gam = p.gamma;
  const double heat = p.gamma * p.nbar;
  const int n_top = p.truncation;

  auto rhs = [&](double, const Eigen::VectorXd& y) {
    Eigen::VectorXd dy(pk.size());
    dy[pk.q(0)] = 2.0 * g * y[pk.r(1)];
    for (int n = 1; n <= n_top; ++n) {
      const double dn = static_cast<double>(n);
      const double p_nm1 = n == 1 ? 1.0 : y[pk.p(n - 1)];
      const double r_np1 = n == n_top ? 0.0 : y[pk.r(n + 1)];
      const double r_nm1 = n == 1 ? 0.0 : y[pk.r(n - 1)];
      dy[pk.p(n)] = dn * g * y[pk.r(n)] - dn * gam * y[pk.p(n)] +
                    dn * dn * heat * p_nm1;
      dy[pk.q(n)] = dn * g * y[pk.r(n)] + 2.0 * g * r_np1 - dn * gam * y[pk.q(n)] +
                    dn * dn * heat * y[pk.q(n - 1)];
      dy[pk.r(n)] = -2.0 * g * y[pk.q(n)] + dn * g * p_nm1 - dn * g * y[pk.q(n - 1)] -
                    (dn - 0.5) * gam * y[pk.r(n)] + dn * (dn - 1.0) * heat * r_nm1;
    }
    return dy;
  };

  HierarchyResult result;
  result.trajectory.reserve(t_grid.size());
  const Eigen::VectorXd y0 = pack(pk, init_from_fock(p));

  integrate_adaptive(rhs, y0, t_grid, opt, [&](double t, const Eigen::VectorXd& y) {
    HierarchyState s = unpack(pk, t, y);
    // Truncation error can push Q_0 marginally past the physical range; a
    // gross excursion means the closure cut sits too close to the occupied
    // levels.
    if (std::abs(s.Q[0]) > 1.0 + 2e-3 || s.P[1] < -2e-3) {
      throw NumericError(
          "integrate_hierarchy: truncated moments left the physical range; "
          "raise truncation above n0 + 1");
    }
    result.series.append(t, s.Q[0], s.P[1], 2e-3);
    result.trajectory.push_back(std::move(s));
  });
  return result;
}

}  // namespace iondecay
