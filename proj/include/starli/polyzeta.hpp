#pragma once
#include <vector>

#include "starli/neglog.hpp"
#include "starli/rational.hpp"

namespace starli {

// Regularized polyzeta value at a non-positive multi-index (s1,...,sr), all
// entries <= 0: gamma_{s1,...,sr} = sum_k a^w_k / k! where w = y_{-s1}...y_{-sr}.
Rat gamma_neg(const std::vector<long>& s);

// Power sum H_{y_k}(N) = sum_{n=1}^N n^{-k}, exact.
Rat power_hsum(unsigned long k, unsigned long N);

// Elementary symmetric sums e_0..e_kmax of {1, 1/2, ..., 1/N}; e_k = H_{y1^k}(N).
std::vector<Rat> elementary_hsums(unsigned long N, unsigned long kmax);

// Verifies sum_{k>=0} H_{y1^k}(N) z^k = exp(-sum_{k>=1} H_{y_k}(N) (-z)^k / k)
// as formal series in z up to degree kmax, with exact rational arithmetic.
bool newton_girard_check(unsigned long N, unsigned long kmax);

// Numerically compares exp(gamma*t - sum_{n=2}^{n_zeta_terms} zeta(n)(-t)^n/n)
// against 1/Gamma(1+t) from a Weierstrass partial product of `product_terms`
// factors (both with Euler-Maclaurin tail corrections); returns |difference|.
// Requires |t| < 1.
double gamma_star_check(double t, unsigned long n_zeta_terms,
                        unsigned long product_terms);

}  // namespace starli
