#include "starli/starpoly.hpp"

#include <sstream>

#include "starli/error.hpp"

namespace starli {

std::string StarTerm::str() const {
  std::ostringstream os;
  bool need_sh = false;
  if (!w.empty()) { os << w.str(); need_sh = true; }
  if (k != 0) {
    if (need_sh) os << " # ";
    os << (k > 0 ? "x0*" : "(-x0)*");
    if (std::abs(k) != 1) os << "^" << std::abs(k);
    need_sh = true;
  }
  if (l != 0) {
    if (need_sh) os << " # ";
    os << "x1*";
    if (l != 1) os << "^" << l;
    need_sh = true;
  }
  if (!need_sh) os << "1";
  return os.str();
}

void sp_add(StarPoly& p, const StarTerm& t, const Rat& c) {
  if (c == 0) return;
  auto [it, ins] = p.emplace(t, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
  check_term_budget(p.size());
}

StarPoly sp_one() { return {{StarTerm{Word(Alphabet::X), 0, 0}, Rat(1)}}; }

StarPoly sp_scale(const StarPoly& p, const Rat& c) {
  StarPoly r;
  if (c == 0) return r;
  for (const auto& [t, x] : p) r.emplace(t, x * c);
  return r;
}

StarPoly sp_sum(const StarPoly& p, const StarPoly& q) {
  StarPoly r = p;
  for (const auto& [t, c] : q) sp_add(r, t, c);
  return r;
}

StarPoly shuffle_star(const StarPoly& p, const StarPoly& q) {
  StarPoly r;
  for (const auto& [t1, c1] : p)
    for (const auto& [t2, c2] : q) {
      NCPoly words = shuffle_words(t1.w, t2.w);
      for (const auto& [v, cv] : words.terms())
        sp_add(r, {v, t1.k + t2.k, t1.l + t2.l}, c1 * c2 * cv);
    }
  return r;
}

StarPoly rewrite_mod_J(const StarPoly& p) {
  StarPoly cur = p;
  while (true) {
    auto it = cur.begin();
    for (; it != cur.end(); ++it)
      if (it->first.k != 0 && it->first.l >= 1) break;
    if (it == cur.end()) return cur;
    StarTerm t = it->first;
    Rat c = it->second;
    cur.erase(it);
    if (t.k > 0) {
      // w sh x0* sh (x1*)^l == w sh (x1*)^l - w sh (x1*)^{l-1} (peel one x0*)
      sp_add(cur, {t.w, t.k - 1, t.l}, c);
      sp_add(cur, {t.w, t.k - 1, t.l - 1}, -c);
    } else {
      // w sh (-x0)* sh (x1*)^l == w sh (-x0)* sh (x1*)^{l-1} + w sh (x1*)^l
      sp_add(cur, {t.w, t.k, t.l - 1}, c);
      sp_add(cur, {t.w, t.k + 1, t.l}, c);
    }
  }
}

CFunction li_ext(const StarPoly& p) {
  CFunction r;
  for (const auto& [t, c] : p) {
    CPoly cp = normalize_coeff(t.k, t.l);
    CFunction f = mul_cpoly(cp, from_word(t.w));
    for (const auto& [b, cb] : f) cf_add(r, b, c * cb);
  }
  return r;
}

}  // namespace starli
