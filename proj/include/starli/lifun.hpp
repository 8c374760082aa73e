#pragma once
#include <complex>
#include <map>
#include <string>

#include "starli/ncpoly.hpp"

namespace starli {

// Coefficient-ring basis monomial: z^k (is_p = false, k any integer) or
// (1-z)^{-l} (is_p = true, k = l >= 1).
struct CoeffMonomial {
  bool is_p = false;
  long k = 0;
  friend auto operator<=>(const CoeffMonomial&, const CoeffMonomial&) = default;
  static CoeffMonomial zpow(long k) { return {false, k}; }
  static CoeffMonomial ppow(long l) { return {true, l}; }
  std::string str() const;
};

using CPoly = std::map<CoeffMonomial, Rat>;

// Exact partial fractions: z^a (1-z)^{-b} in the basis {z^k} u {(1-z)^{-l}}.
CPoly normalize_coeff(long a, unsigned long b);
CPoly cpoly_mul(const CPoly& f, const CPoly& g);

// One basis element c(z) * Li_u(z) * log^n(z)/n! with u empty or ending x1.
struct BasisElem {
  CoeffMonomial c;
  Word u;        // over X; empty or ending in x1
  unsigned n = 0;  // log power (1/n! convention)
  friend bool operator==(const BasisElem& a, const BasisElem& b) {
    return a.c == b.c && a.u == b.u && a.n == b.n;
  }
  friend bool operator<(const BasisElem& a, const BasisElem& b) {
    if (a.c != b.c) return a.c < b.c;
    if (!(a.u == b.u)) return a.u < b.u;
    return a.n < b.n;
  }
  std::string str() const;
};

using CFunction = std::map<BasisElem, Rat>;

void cf_add(CFunction& f, const BasisElem& b, const Rat& c);
CFunction cf_scale(const CFunction& f, const Rat& c);
CFunction cf_add(const CFunction& f, const CFunction& g);
CFunction cf_one();

// Li_w in basis B (tail elimination for trailing x0's; x0^n -> log^n z/n!).
CFunction from_word(const Word& w);

CFunction mul(const CFunction& f, const CFunction& g);
CFunction mul_cpoly(const CPoly& p, const CFunction& f);

CFunction deriv(const CFunction& f);   // d/dz
CFunction theta0(const CFunction& f);  // z d/dz
CFunction theta1(const CFunction& f);  // (1-z) d/dz

long ind(const BasisElem& b);

// Sections of theta0/theta1: per input basis term, an exact antiderivative of
// b(s)/s (resp. b(s)/(1-s)) inside C{Li_w}, minus its limit at the basepoint
// (iota0: 0 if ind >= 1 else 1; iota1: always 0). DomainError "divergent
// integration constant" if the limit is infinite, "integration constant not
// rational" if it is finite but outside Q (surviving zeta-type symbols).
CFunction iota0(const CFunction& f);
CFunction iota1(const CFunction& f);

// Exact Taylor coefficient [z^m] Li_u for u in {empty} u X*x1.
Rat li_taylor_coeff(const Word& u, unsigned long m);

std::complex<double> eval(const CFunction& f, std::complex<double> z, unsigned long N);

}  // namespace starli
