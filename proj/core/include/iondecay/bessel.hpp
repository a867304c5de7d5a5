// bessel.hpp — modified Bessel function K1 to full double precision

#pragma once

namespace iondecay {

// K1(x) for x > 0. Ascending series below the seam at x = 2, continued-
// fraction evaluation of the large-argument (asymptotic) form above it.
// Underflows smoothly to zero past x ~ 705. Throws DomainError for x <= 0.
double bessel_k1(double x);

}  // namespace iondecay
