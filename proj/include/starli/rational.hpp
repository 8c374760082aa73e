#pragma once
#include <gmpxx.h>

#include <string>

namespace starli {

using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

// Binomial C(a, k) for possibly negative/rational upper argument.
inline Rat binom_rat(const Rat& a, unsigned long k) {
  Rat r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= (a - (long)i) / Rat((long)(i + 1));
  return r;
}

inline Rat factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace starli
