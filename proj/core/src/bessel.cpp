#include "iondecay/bessel.hpp"

#include <cmath>

#include "iondecay/constants.hpp"
#include "iondecay/errors.hpp"

namespace iondecay {

namespace {

constexpr double euler_gamma = 0.57721566490153286061;

// Ascending series (DLMF 10.31.2 at order one):
//   K1(x) = 1/x + ln(x/2) I1(x)
//           - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
// Converges fast for x < 2; cancellation stays negligible there.
double k1_series(double x) {
  const double quarter_x2 = 0.25 * x * x;
  double coeff = 1.0;               // (x^2/4)^k / (k! (k+1)!)
  double psi_a = -euler_gamma;      // psi(k+1)
  double psi_b = 1.0 - euler_gamma; // psi(k+2)
  double bessel_i1_sum = 0.0;
  double psi_sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    bessel_i1_sum += coeff;
    const double term = (psi_a + psi_b) * coeff;
    psi_sum += term;
    if (std::abs(term) < 1e-18 * std::abs(psi_sum) && k > 2) break;
    coeff *= quarter_x2 / ((k + 1.0) * (k + 2.0));
    psi_a += 1.0 / (k + 1.0);
    psi_b += 1.0 / (k + 2.0);
  }
  const double bessel_i1 = 0.5 * x * bessel_i1_sum;
  return 1.0 / x + std::log(0.5 * x) * bessel_i1 - 0.25 * x * psi_sum;
}

// Temme/Thompson-Barnett continued fraction (CF2) at order zero, the
// convergent form of the large-argument expansion. Yields K0 and the ratio
// needed for K1 = K0 (x + 1/2 - h) / x.
double k1_continued_fraction(double x) {
  constexpr double eps = 1e-16;
  constexpr int max_iter = 10000;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double h = delh;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= max_iter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels) < eps * std::abs(s)) {
      h = a1 * h;
      const double k0 = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
      return k0 * (x + 0.5 - h) / x;
    }
  }
  throw NumericError("bessel_k1: continued fraction failed to converge");
}

}  // namespace

double bessel_k1(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k1: x must be > 0");
  return x < 2.0 ? k1_series(x) : k1_continued_fraction(x);
}

}  // namespace iondecay
