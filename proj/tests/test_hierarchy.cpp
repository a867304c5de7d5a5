#include <doctest.h>

#include <cmath>
#include <vector>

#include "iondecay/hierarchy.hpp"
#include "iondecay/lindblad.hpp"

using namespace iondecay;

namespace {

std::vector<double> uniform_grid(double t_max, int n) {
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) grid[i] = i * t_max / n;
  return grid;
}

}  // namespace

TEST_CASE("initial Fock moments are falling factorials") {
  HierarchyParams p{1.0, 0.0, 0.0, 4, 0};
  HierarchyState s = init_from_fock(p);
  CHECK(s.P[0] == 1.0);
  CHECK(s.P[1] == 0.0);
  CHECK(s.Q[0] == -1.0);
  CHECK(s.R.sum() == 0.0);

  p.n0 = 1;
  s = init_from_fock(p);
  CHECK(s.P[0] == 1.0);
  CHECK(s.P[1] == 1.0);
  CHECK(s.P[2] == 0.0);
  CHECK(s.Q[1] == -1.0);

  p.n0 = 2;
  s = init_from_fock(p);
  CHECK(s.P[1] == 2.0);
  CHECK(s.P[2] == 2.0);
  CHECK(s.P[3] == 0.0);

  // density-matrix shadows of the same Fock state agree
  for (int n0 : {0, 1, 2}) {
    p.n0 = n0;
    s = init_from_fock(p);
    const auto rho = DensityMatrix::pure(FockSpinVector::basis_state(10, n0, Spin::down));
    const HierarchyState shadow = moments_from_density(rho, p.truncation, 0.0);
    for (int n = 0; n <= p.truncation; ++n) {
      CHECK(s.P[n] == doctest::Approx(shadow.P[n]).epsilon(1e-12));
      CHECK(s.Q[n] == doctest::Approx(shadow.Q[n]).epsilon(1e-12));
    }
  }
}

TEST_CASE("truncation must hold the initial Fock state") {
  CHECK_THROWS_AS(init_from_fock(HierarchyParams{1.0, 0.0, 0.0, 2, 2}), TruncationTooSmall);
  CHECK_THROWS_AS(init_from_fock(HierarchyParams{1.0, -1.0, 0.0, 4, 0}), DomainError);
}

TEST_CASE("moment flow at the initial instant") {
  const double g = 2.0;
  const HierarchyParams p{g, 0.3, 0.7, 4, 0};
  const HierarchyState s = init_from_fock(p);
  const HierarchyRates r = hierarchy_rhs(p, s);
  CHECK(r.dQ[0] == 0.0);                  // 2 g R_1 with R_1 = 0
  CHECK(r.dR[1] == doctest::Approx(2.0 * g));  // g (P_0 - Q_0) = 2g from |0,down>
  CHECK(d_sigma_z(p, s) == r.dQ[0]);
  CHECK(d_mean_n(p, s) == doctest::Approx(r.dP[1]).epsilon(1e-15));
}

TEST_CASE("undamped inversion-excitation conservation") {
  const HierarchyParams p{1.5, 0.0, 0.0, 5, 0};
  const auto grid = uniform_grid(12.0, 400);
  const HierarchyResult r = integrate_hierarchy(p, grid);
  const double c0 = r.trajectory.front().Q[0] - 2.0 * r.trajectory.front().P[1];
  for (const HierarchyState& s : r.trajectory) {
    CHECK(std::abs(s.Q[0] - 2.0 * s.P[1] - c0) <= 1e-9);
  }
}

TEST_CASE("driveless relaxation") {
  // g = 0, nbar = 0: each P_n decays as exp(-n gamma t)
  {
    HierarchyParams p{0.0, 1.0, 0.0, 4, 3};
    const auto grid = uniform_grid(2.0, 50);
    const HierarchyResult r = integrate_hierarchy(p, grid);
    const HierarchyState& start = r.trajectory.front();
    for (const HierarchyState& s : r.trajectory) {
      for (int n = 1; n <= p.truncation; ++n) {
        CHECK(std::abs(s.P[n] - start.P[n] * std::exp(-n * p.gamma * s.t)) <= 1e-9);
      }
    }
  }
  // g = 0, nbar > 0: inversion frozen, occupation relaxes to nbar
  {
    HierarchyParams p{0.0, 2.0, 0.8, 4, 1};
    const auto grid = uniform_grid(3.0, 60);
    const HierarchyResult r = integrate_hierarchy(p, grid);
    for (const HierarchyState& s : r.trajectory) {
      CHECK(std::abs(s.Q[0] - (-1.0)) <= 1e-9);
      const double expected = p.nbar + (1.0 - p.nbar) * std::exp(-p.gamma * s.t);
      CHECK(std::abs(s.P[1] - expected) <= 1e-9);
    }
  }
}

TEST_CASE("undamped flopping matches the closed form") {
  const double g = 1.0;
  const auto grid = uniform_grid(20.0, 800);
  for (int n0 : {0, 1}) {
    HierarchyParams p{g, 0.0, 0.0, 4, n0};
    const HierarchyResult r = integrate_hierarchy(p, grid);
    CHECK(r.series.p_down.front() == 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double expected = std::pow(std::cos(std::sqrt(n0 + 1.0) * g * grid[i]), 2);
      worst = std::max(worst, std::abs(r.series.p_down[i] - expected));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("zero-temperature closure is exact") {
  const double g = 1.0;
  const auto grid = uniform_grid(20.0, 200);
  const HierarchyResult narrow = integrate_hierarchy({g, 0.006, 0.0, 1, 0}, grid);
  const HierarchyResult wide = integrate_hierarchy({g, 0.006, 0.0, 6, 0}, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(narrow.series.p_down[i] - wide.series.p_down[i]));
  }
  CHECK(worst <= 1e-10);
  // the higher moments never wake up
  for (const HierarchyState& s : wide.trajectory) {
    CHECK(std::abs(s.P[2]) <= 1e-12);
    CHECK(std::abs(s.R[2]) <= 1e-12);
  }
}

TEST_CASE("truncation stability at the damped-flop operating point") {
  const double g = 0.202 * two_pi * 475e3;
  const auto grid = uniform_grid(120e-6, 600);
  const HierarchyResult coarse = integrate_hierarchy({g, 6e-3 * g, 1.0, 4, 0}, grid);
  const HierarchyResult fine = integrate_hierarchy({g, 6e-3 * g, 1.0, 8, 0}, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, std::abs(coarse.series.p_down[i] - fine.series.p_down[i]));
  }
  CHECK(worst <= 1e-3);

  // moment bounds hold along the whole trajectory
  for (const HierarchyState& s : fine.trajectory) s.validate();
  for (const HierarchyState& s : coarse.trajectory) s.validate();
}

TEST_CASE("flop period at the damped operating point") {
  const double g = 0.202 * two_pi * 475e3;
  const auto grid = uniform_grid(20e-6, 2000);
  const HierarchyResult r = integrate_hierarchy({g, 6e-3 * g, 1.0, 4, 0}, grid);
  // first revival of P_down locates the flop period ~ pi / g = 5.21 us
  std::size_t best = 100;
  for (std::size_t i = 100; i < grid.size(); ++i) {
    if (r.series.p_down[i] > r.series.p_down[best]) best = i;
    if (grid[i] > 7e-6) break;
  }
  CHECK(grid[best] * 1e6 == doctest::Approx(pi / g * 1e6).epsilon(0.02));
}

TEST_CASE("integration grid validation") {
  const HierarchyParams p{1.0, 0.0, 0.0, 4, 0};
  std::vector<double> bad_start{0.1, 0.2};
  CHECK_THROWS_AS(integrate_hierarchy(p, bad_start), DomainError);
  std::vector<double> not_increasing{0.0, 0.2, 0.2};
  CHECK_THROWS_AS(integrate_hierarchy(p, not_increasing), DomainError);
}

TEST_CASE("a closure cut on the occupied levels fails loudly") {
  const double g = 0.202 * two_pi * 475e3;
  const auto grid = uniform_grid(20e-6, 200);
  // minimal truncation right at n0 + 1 collapses for a damped run from |3>
  CHECK_THROWS_AS(integrate_hierarchy({g, 6e-3 * g, 1.0, 4, 3}, grid), NumericError);
  // one more retained order is stable and physical
  const HierarchyResult r = integrate_hierarchy({g, 6e-3 * g, 1.0, 5, 3}, grid);
  for (const HierarchyState& s : r.trajectory) {
    CHECK(std::abs(s.Q[0]) <= 1.0 + 2e-3);
  }
}

TEST_CASE("absurd stiffness reports step underflow") {
  const HierarchyParams p{0.0, 1e30, 0.0, 4, 1};
  const auto grid = uniform_grid(1e-6, 2);
  CHECK_THROWS_AS(integrate_hierarchy(p, grid), StepSizeUnderflow);
}
