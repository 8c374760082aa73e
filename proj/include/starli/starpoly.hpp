#pragma once
#include <map>
#include <string>

#include "starli/lifun.hpp"
#include "starli/ncpoly.hpp"

namespace starli {

// Basis monomial w sh (x0*)^sh k sh (x1*)^sh l of the shuffle module
// C<X>[x0*, (-x0)*, x1*]; negative k encodes ((-x0)*)^sh |k|.
struct StarTerm {
  Word w;   // over X
  long k = 0;
  unsigned long l = 0;
  friend bool operator==(const StarTerm& a, const StarTerm& b) {
    return a.w == b.w && a.k == b.k && a.l == b.l;
  }
  friend bool operator<(const StarTerm& a, const StarTerm& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
  }
  std::string str() const;
};

using StarPoly = std::map<StarTerm, Rat>;

void sp_add(StarPoly& p, const StarTerm& t, const Rat& c);
StarPoly sp_one();
StarPoly sp_scale(const StarPoly& p, const Rat& c);
StarPoly sp_sum(const StarPoly& p, const StarPoly& q);

StarPoly shuffle_star(const StarPoly& p, const StarPoly& q);

// Rewrites modulo the ideal J = (x0* sh x1* - x1* + 1) until every term has
// k*l = 0. Exact; termination measure sum of l*|k|.
StarPoly rewrite_mod_J(const StarPoly& p);

// The extension Li^(1): x0* -> z, (-x0)* -> 1/z, x1* -> 1/(1-z), words -> Li_w.
CFunction li_ext(const StarPoly& p);

}  // namespace starli
