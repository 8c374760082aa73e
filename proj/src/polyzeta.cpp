#include "starli/polyzeta.hpp"

#include <cmath>
#include <cstdlib>

#include "starli/error.hpp"

namespace starli {

Rat gamma_neg(const std::vector<long>& s) {
  std::vector<unsigned> idx;
  idx.reserve(s.size());
  for (long e : s) {
    if (e > 0) throw DomainError("gamma_neg: positive index " + std::to_string(e));
    idx.push_back(static_cast<unsigned>(-e));
  }
  Word w(Alphabet::Y0, idx);
  AVector v = a_coeffs(w);
  Rat total = 0;
  for (std::size_t k = 0; k < v.a.size(); ++k) total += v.a[k] / factorial(k);
  return total;
}

Rat power_hsum(unsigned long k, unsigned long N) {
  Rat total = 0;
  for (unsigned long n = 1; n <= N; ++n) {
    Rat p = 1;
    for (unsigned long j = 0; j < k; ++j) p /= (long)n;
    total += p;
  }
  return total;
}

std::vector<Rat> elementary_hsums(unsigned long N, unsigned long kmax) {
  std::vector<Rat> e(kmax + 1, Rat(0));
  e[0] = 1;
  for (unsigned long n = 1; n <= N; ++n)
    for (unsigned long k = std::min<unsigned long>(kmax, n); k >= 1; --k)
      e[k] += e[k - 1] / (long)n;
  return e;
}

bool newton_girard_check(unsigned long N, unsigned long kmax) {
  std::vector<Rat> e = elementary_hsums(N, kmax);
  // B(z) = -sum_{k>=1} H_{y_k}(N) (-z)^k / k; b[j] = (-1)^{j+1} H_{y_j}(N) / j.
  std::vector<Rat> b(kmax + 1, Rat(0));
  for (unsigned long j = 1; j <= kmax; ++j) {
    b[j] = power_hsum(j, N) / (long)j;
    if (j % 2 == 0) b[j] = -b[j];
  }
  // Formal exp: C = exp(B), C' = B'C, so m c_m = sum_{j=1}^m j b_j c_{m-j}.
  std::vector<Rat> c(kmax + 1, Rat(0));
  c[0] = 1;
  for (unsigned long m = 1; m <= kmax; ++m) {
    Rat acc = 0;
    for (unsigned long j = 1; j <= m; ++j) acc += Rat((long)j) * b[j] * c[m - j];
    c[m] = acc / (long)m;
  }
  for (unsigned long k = 0; k <= kmax; ++k)
    if (c[k] != e[k]) return false;
  return true;
}

namespace {

// Euler-Mascheroni constant to 50 digits (computed by the Brent-McMillan
// AGM-style algorithm; value as tabulated in standard references, OEIS A001620).
const double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;

// zeta(s) for integer s >= 2 by direct summation to M with the Euler-Maclaurin
// correction terms at M; absolute error O(s^3 M^{-s-3}).
double zeta_int(unsigned long s, unsigned long M) {
  double sum = 0.0;
  for (unsigned long m = 1; m <= M; ++m) sum += std::pow((double)m, -(double)s);
  double Md = (double)M;
  sum += std::pow(Md, 1.0 - (double)s) / ((double)s - 1.0);
  sum -= 0.5 * std::pow(Md, -(double)s);
  sum += (double)s * std::pow(Md, -(double)s - 1.0) / 12.0;
  return sum;
}

// Tail sum_{n > M} n^{-s} with the same Euler-Maclaurin scheme.
double zeta_tail(unsigned long s, unsigned long M) {
  double Md = (double)M;
  return std::pow(Md, 1.0 - (double)s) / ((double)s - 1.0) -
         0.5 * std::pow(Md, -(double)s) +
         (double)s * std::pow(Md, -(double)s - 1.0) / 12.0;
}

}  // namespace

double gamma_star_check(double t, unsigned long n_zeta_terms,
                        unsigned long product_terms) {
  if (std::abs(t) >= 1.0) throw DomainError("gamma_star_check: |t| must be < 1");
  const unsigned long M = 1000;  // direct-sum length for zeta values

  // Left side: exp(gamma t - sum_{n=2}^{n_zeta_terms} zeta(n) (-t)^n / n).
  double expo = kEulerGamma * t;
  double pw = -t;  // (-t)^1
  for (unsigned long n = 2; n <= n_zeta_terms; ++n) {
    pw *= -t;
    expo -= zeta_int(n, M) * pw / (double)n;
  }
  double lhs = std::exp(expo);

  // Right side: 1/Gamma(1+t) by the Weierstrass product
  //   e^{gamma t} prod_{n<=P} (1+t/n) e^{-t/n}
  // times the tail factor exp(sum_{j>=2} (-1)^{j+1} t^j zeta_tail_P(j) / j).
  const unsigned long P = product_terms;
  double logp = kEulerGamma * t;
  for (unsigned long n = 1; n <= P; ++n) {
    double x = t / (double)n;
    logp += std::log1p(x) - x;
  }
  double tj = t;  // t^1
  for (unsigned long j = 2; j <= 40; ++j) {
    tj *= t;
    double term = tj * zeta_tail(j, P) / (double)j;
    logp += (j % 2 == 0) ? -term : term;
    if (std::abs(term) < 1e-18) break;
  }
  double rhs = std::exp(logp);

  return std::abs(lhs - rhs);
}

}  // namespace starli
