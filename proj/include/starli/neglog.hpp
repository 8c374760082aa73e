#pragma once
#include <vector>

#include "starli/starpoly.hpp"
#include "starli/words.hpp"

namespace starli {

// Li^-_w(z) = sum_k a[k] (1-z)^{-k}, k = 0 .. weight(w)+|w|.
struct AVector {
  Word w;              // over Y0
  std::vector<Rat> a;  // length weight(w)+|w|+1
};

unsigned long y_weight(const Word& w);  // sum of subscripts

// The paper's prefix recursion.
AVector a_coeffs(const Word& w);

// Independent route in the variable u = (1-z)^{-1}: Li^-_{y0 u'} = (u-1) Li^-_{u'},
// Li^-_{y_k u'} = theta0 Li^-_{y_{k-1} u'} with theta0 p(u) = (u^2-u) p'(u).
AVector a_coeffs_oracle(const Word& w);

// P_w = sum_i a_i (x1*)^sh i as a StarPoly.
StarPoly neg_li_poly(const Word& w);

// H^-_w(N) = sum_k a_k binom(N+k, k), exact.
Rat neg_hsum(const Word& w, unsigned long N);

// Brute-force nested summation over N >= n1 > ... > nr > 0.
Rat neg_hsum_oracle(const Word& w, unsigned long N);

// One term c * binom(N+n, m) of the compacted closed form.
struct FaulhaberTerm {
  Rat c;
  long n;       // shift
  unsigned long m;  // order
};

struct FaulhaberForm {
  std::vector<FaulhaberTerm> terms;
  bool within_bound = true;  // term count <= floor((weight+len)/2) + 1
};

// Compacts H^-_w(N) into sum c_j binom(N+n_j, m_j); always exact, flags the
// paper's term-count bound when it cannot be met.
FaulhaberForm faulhaber_reduce(const AVector& v);

// Expands sum c binom(N+n, m) to polynomial coefficients in N (index = power).
std::vector<Rat> faulhaber_poly(const FaulhaberForm& f);
std::vector<Rat> hsum_poly(const AVector& v);  // same for Prop-style formula

}  // namespace starli
