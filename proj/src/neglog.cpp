#include "starli/neglog.hpp"

#include <functional>

#include "starli/error.hpp"

namespace starli {

unsigned long y_weight(const Word& w) {
  unsigned long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i];
  return s;
}

static void require_y(const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::Y0)
    throw DomainError("expected a word over Y0");
}

AVector a_coeffs(const Word& w) {
  require_y(w);
  if (w.empty()) return {w, {Rat(1)}};
  unsigned k = w[0];
  Word u = w.subword(1, w.size() - 1);
  if (k == 0) {
    AVector au = a_coeffs(u);
    std::size_t p = au.a.size() - 1;  // weight(u)+|u|
    std::vector<Rat> res(p + 2, Rat(0));
    res[p + 1] = au.a[p];
    for (std::size_t i = 1; i <= p; ++i) res[i] = au.a[i - 1] - au.a[i];
    res[0] = -au.a[0];
    return {w, std::move(res)};
  }
  AVector prev = a_coeffs(u.prepend(k - 1));
  std::size_t q = prev.a.size() - 1;  // weight+len of the y_{k-1} word
  std::vector<Rat> res(q + 2, Rat(0));
  res[q + 1] = Rat((long)q) * prev.a[q];
  for (std::size_t i = 2; i <= q; ++i)
    res[i] = Rat((long)(i - 1)) * prev.a[i - 1] - Rat((long)i) * prev.a[i];
  if (q >= 1) res[1] = -prev.a[1];
  return {w, std::move(res)};
}

AVector a_coeffs_oracle(const Word& w) {
  require_y(w);
  // polynomial in u = (1-z)^{-1}; Li^-_w = sum a_k u^k, so the coefficient
  // vector in u is the a-vector itself
  std::function<std::vector<Rat>(const Word&)> rec = [&](const Word& v) -> std::vector<Rat> {
    if (v.empty()) return {Rat(1)};
    unsigned k = v[0];
    Word tail = v.subword(1, v.size() - 1);
    if (k == 0) {
      // Li^-_{y0 v'} = (u - 1) Li^-_{v'}
      std::vector<Rat> p = rec(tail);
      std::vector<Rat> r(p.size() + 1, Rat(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + 1] += p[i];
        r[i] -= p[i];
      }
      return r;
    }
    // Li^-_{y_k v'} = theta0 Li^-_{y_{k-1} v'}, theta0 p(u) = (u^2 - u) p'(u)
    std::vector<Rat> p = rec(tail.prepend(k - 1));
    std::vector<Rat> r(p.size() + 1, Rat(0));
    for (std::size_t i = 1; i < p.size(); ++i) {
      r[i + 1] += Rat((long)i) * p[i];
      r[i] -= Rat((long)i) * p[i];
    }
    return r;
  };
  std::vector<Rat> a = rec(w);
  a.resize(y_weight(w) + w.size() + 1, Rat(0));
  return {w, std::move(a)};
}

StarPoly neg_li_poly(const Word& w) {
  AVector v = a_coeffs(w);
  StarPoly p;
  for (std::size_t i = 0; i < v.a.size(); ++i)
    sp_add(p, {Word(Alphabet::X), 0, (unsigned long)i}, v.a[i]);
  return p;
}

Rat neg_hsum(const Word& w, unsigned long N) {
  AVector v = a_coeffs(w);
  Rat s = 0;
  for (std::size_t k = 0; k < v.a.size(); ++k) s += v.a[k] * binom(N + k, k);
  return s;
}

Rat neg_hsum_oracle(const Word& w, unsigned long N) {
  require_y(w);
  std::function<Rat(std::size_t, unsigned long)> rec = [&](std::size_t j,
                                                           unsigned long bound) -> Rat {
    if (j == w.size()) return 1;
    Rat s = 0;
    for (unsigned long n = w.size() - j; n <= bound; ++n) {
      Rat p = 1;
      for (unsigned e = 0; e < w[j]; ++e) p *= (long)n;
      s += p * rec(j + 1, n - 1);
    }
    return s;
  };
  return rec(0, N);
}

FaulhaberForm faulhaber_reduce(const AVector& v) {
  std::size_t p = v.a.size() - 1;
  // numerator Q(z) = (1-z)^p Li^-_w(z) = sum_k a_k (1-z)^{p-k}, in the z basis
  std::vector<Rat> q(p + 1, Rat(0));
  for (std::size_t k = 0; k <= p; ++k)
    for (std::size_t i = 0; i <= p - k; ++i)
      q[i] += v.a[k] * ((i % 2) ? -1 : 1) * binom(p - k, i);
  FaulhaberForm out;
  while (true) {
    std::size_t b = 0, d = p;
    while (b <= p && q[b] == 0) ++b;
    if (b > p) break;
    while (q[d] == 0) --d;
    // peel c z^b (1-z)^e: kill the lowest coefficient, and the highest too
    // when the sign pattern allows it
    unsigned long e = 0;
    Rat c = q[b];
    if (d > b) {
      Rat mirror = ((d - b) % 2) ? -c : c;
      if (q[d] == mirror) e = d - b;
    }
    for (unsigned long i = 0; i <= e; ++i)
      q[b + i] -= c * (((i % 2) ? -1 : 1) * binom(e, i));
    // c z^b (1-z)^e in Q corresponds to c binom(N+n, m), m = p-e, n = m-b
    out.terms.push_back({c, (long)(p - e) - (long)b, p - e});
  }
  out.within_bound = out.terms.size() <= p / 2 + 1;
  return out;
}

static std::vector<Rat> binom_poly(long n, unsigned long m) {
  // binom(N+n, m) as a polynomial in N: prod_{j=0}^{m-1} (N+n-j) / m!
  std::vector<Rat> poly{Rat(1)};
  for (unsigned long j = 0; j < m; ++j) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    Rat shift = Rat(n) - Rat((long)j);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * shift;
    }
    poly = std::move(next);
  }
  Rat f = factorial(m);
  for (auto& x : poly) x /= f;
  return poly;
}

static void poly_acc(std::vector<Rat>& acc, const std::vector<Rat>& p, const Rat& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

static void poly_trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> faulhaber_poly(const FaulhaberForm& f) {
  std::vector<Rat> acc;
  for (const auto& t : f.terms) poly_acc(acc, binom_poly(t.n, t.m), t.c);
  poly_trim(acc);
  return acc;
}

std::vector<Rat> hsum_poly(const AVector& v) {
  std::vector<Rat> acc;
  for (std::size_t k = 0; k < v.a.size(); ++k)
    poly_acc(acc, binom_poly((long)k, k), v.a[k]);
  poly_trim(acc);
  return acc;
}

}  // namespace starli
