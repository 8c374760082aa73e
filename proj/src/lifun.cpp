#include "starli/lifun.hpp"

#include <functional>
#include <sstream>
#include <tuple>

#include "starli/error.hpp"

namespace starli {

std::string CoeffMonomial::str() const {
  if (is_p) return "(1-z)^-" + std::to_string(k);
  return "z^" + std::to_string(k);
}

std::string BasisElem::str() const {
  std::ostringstream os;
  os << c.str();
  if (!u.empty()) os << " Li[" << u.str() << "]";
  if (n) os << " log^" << n << "/" << n << "!";
  return os.str();
}

// ----------------------------------------------------------- coefficient ring

static void cp_add(CPoly& p, const CoeffMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, ins] = p.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

CPoly normalize_coeff(long a, unsigned long b) {
  if (b == 0) return {{CoeffMonomial::zpow(a), Rat(1)}};
  if (a == 0) return {{CoeffMonomial::ppow((long)b), Rat(1)}};
  CPoly r;
  if (a > 0) {
    // z^a (1-z)^-b = z^{a-1}(1-z)^-b - z^{a-1}(1-z)^-(b-1)
    for (const auto& [m, c] : normalize_coeff(a - 1, b)) cp_add(r, m, c);
    for (const auto& [m, c] : normalize_coeff(a - 1, b - 1)) cp_add(r, m, -c);
  } else {
    // z^a (1-z)^-b = z^a (1-z)^-(b-1) + z^{a+1}(1-z)^-b
    for (const auto& [m, c] : normalize_coeff(a, b - 1)) cp_add(r, m, c);
    for (const auto& [m, c] : normalize_coeff(a + 1, b)) cp_add(r, m, c);
  }
  return r;
}

static CPoly mono_mul(const CoeffMonomial& x, const CoeffMonomial& y) {
  if (!x.is_p && !y.is_p) return {{CoeffMonomial::zpow(x.k + y.k), Rat(1)}};
  if (x.is_p && y.is_p) return {{CoeffMonomial::ppow(x.k + y.k), Rat(1)}};
  const CoeffMonomial& zm = x.is_p ? y : x;
  const CoeffMonomial& pm = x.is_p ? x : y;
  return normalize_coeff(zm.k, (unsigned long)pm.k);
}

CPoly cpoly_mul(const CPoly& f, const CPoly& g) {
  CPoly r;
  for (const auto& [mx, cx] : f)
    for (const auto& [my, cy] : g)
      for (const auto& [m, c] : mono_mul(mx, my)) cp_add(r, m, cx * cy * c);
  return r;
}

// ----------------------------------------------------------------- CFunction

void cf_add(CFunction& f, const BasisElem& b, const Rat& c) {
  if (c == 0) return;
  auto [it, ins] = f.emplace(b, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
  check_term_budget(f.size());
}

CFunction cf_scale(const CFunction& f, const Rat& c) {
  CFunction r;
  if (c == 0) return r;
  for (const auto& [b, x] : f) r.emplace(b, x * c);
  return r;
}

CFunction cf_add(const CFunction& f, const CFunction& g) {
  CFunction r = f;
  for (const auto& [b, c] : g) cf_add(r, b, c);
  return r;
}

CFunction cf_one() { return {{BasisElem{CoeffMonomial::zpow(0), Word(Alphabet::X), 0}, Rat(1)}}; }

CFunction from_word(const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::X)
    throw DomainError("from_word expects a word over X");
  CFunction r;
  std::size_t t = 0;  // trailing x0 count
  while (t < w.size() && w[w.size() - 1 - t] == 0) ++t;
  if (t == w.size()) {
    cf_add(r, {CoeffMonomial::zpow(0), Word(Alphabet::X), (unsigned)t}, 1);
    return r;
  }
  // w = u x1 x0^t
  Word u = w.subword(0, w.size() - t - 1);
  auto P = x0_tail_eliminate(u, (unsigned)t);
  for (unsigned m = 0; m <= t; ++m)
    for (const auto& [v, c] : P[m].terms())
      cf_add(r, {CoeffMonomial::zpow(0), v.append(1), m}, c);
  return r;
}

CFunction mul_cpoly(const CPoly& p, const CFunction& f) {
  CFunction r;
  for (const auto& [b, cb] : f) {
    CPoly prod = cpoly_mul(p, {{b.c, Rat(1)}});
    for (const auto& [m, c] : prod) cf_add(r, {m, b.u, b.n}, c * cb);
  }
  return r;
}

CFunction mul(const CFunction& f, const CFunction& g) {
  CFunction r;
  for (const auto& [b1, c1] : f)
    for (const auto& [b2, c2] : g) {
      CPoly cp = mono_mul(b1.c, b2.c);
      NCPoly words;
      if (b1.u.empty())
        words = NCPoly::monomial(b2.u);
      else if (b2.u.empty())
        words = NCPoly::monomial(b1.u);
      else
        words = shuffle_words(b1.u, b2.u);
      Rat base = c1 * c2 * binom(b1.n + b2.n, b1.n);
      unsigned n = b1.n + b2.n;
      for (const auto& [m, cm] : cp)
        for (const auto& [v, cv] : words.terms())
          cf_add(r, {m, v, n}, base * cm * cv);
    }
  return r;
}

CFunction deriv(const CFunction& f) {
  static const CPoly zinv = {{CoeffMonomial::zpow(-1), Rat(1)}};
  static const CPoly pone = {{CoeffMonomial::ppow(1), Rat(1)}};
  CFunction r;
  auto add_piece = [&r](const CPoly& cp, const Word& u, unsigned n, const Rat& c) {
    for (const auto& [m, cm] : cp) cf_add(r, {m, u, n}, cm * c);
  };
  for (const auto& [b, cb] : f) {
    // coefficient factor
    if (b.c.is_p) {
      add_piece({{CoeffMonomial::ppow(b.c.k + 1), Rat(b.c.k)}}, b.u, b.n, cb);
    } else if (b.c.k != 0) {
      add_piece({{CoeffMonomial::zpow(b.c.k - 1), Rat(b.c.k)}}, b.u, b.n, cb);
    }
    // word factor: d/dz Li_{x_i u'} = Li_{u'} * (1/z or 1/(1-z))
    if (!b.u.empty()) {
      Word tail = b.u.subword(1, b.u.size() - 1);
      const CPoly& om = (b.u[0] == 0) ? zinv : pone;
      CPoly cp = cpoly_mul({{b.c, Rat(1)}}, om);
      // tail may be empty or end in x1 (u ended in x1), so it is basis-legal
      add_piece(cp, tail, b.n, cb);
    }
    // log factor: d/dz log^n/n! = (log^{n-1}/(n-1)!) / z
    if (b.n > 0) {
      CPoly cp = cpoly_mul({{b.c, Rat(1)}}, zinv);
      add_piece(cp, b.u, b.n - 1, cb);
    }
  }
  return r;
}

CFunction theta0(const CFunction& f) {
  return mul_cpoly({{CoeffMonomial::zpow(1), Rat(1)}}, deriv(f));
}

CFunction theta1(const CFunction& f) {
  CPoly one_minus_z = {{CoeffMonomial::zpow(0), Rat(1)}, {CoeffMonomial::zpow(1), Rat(-1)}};
  return mul_cpoly(one_minus_z, deriv(f));
}

long ind(const BasisElem& b) {
  long k = b.c.is_p ? 0 : b.c.k;
  return k + (long)b.u.size();
}

// -------------------------------------------------------------- Li expansion

Rat li_taylor_coeff(const Word& u, unsigned long m) {
  if (u.empty()) return m == 0 ? Rat(1) : Rat(0);
  if (m == 0) return 0;
  // exponent list s1..sr from x0^{s1-1}x1...
  std::vector<unsigned long> s;
  unsigned long run = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) ++run;
    else { s.push_back(run + 1); run = 0; }
  }
  if (run != 0) throw DomainError("li_taylor_coeff: word must end in x1");
  // H(s_j.., N) by direct recursion (small N only)
  std::function<Rat(std::size_t, unsigned long)> H = [&](std::size_t j, unsigned long N) -> Rat {
    if (j == s.size()) return 1;
    Rat sum = 0;
    for (unsigned long n2 = 1; n2 <= N; ++n2) {
      Rat p = 1;
      for (unsigned long e = 0; e < s[j]; ++e) p *= (long)n2;
      sum += H(j + 1, n2 - 1) / p;
    }
    return sum;
  };
  Rat p = 1;
  for (unsigned long e = 0; e < s[0]; ++e) p *= (long)m;
  return H(1, m - 1) / p;
}

// ------------------------------------------------------- limits and sections

namespace {

// Exact limit of F at z -> 0+; throws DomainError if divergent.
Rat limit_at_0(const CFunction& F) {
  // lim[n][o]: coefficient of log^n(z)/n! * z^o, tracked for o <= 0 only.
  std::map<std::pair<unsigned, long>, Rat> lim;
  for (const auto& [b, c] : F) {
    if (b.c.is_p) {
      if (b.u.empty()) lim[{b.n, 0}] += c;  // (1-z)^-l -> 1
      // else order >= 1: -> 0
      continue;
    }
    long k = b.c.k;
    if (b.u.empty()) {
      if (k <= 0) lim[{b.n, k}] += c;
    } else {
      for (long m = 1; m <= -k; ++m) lim[{b.n, k + m}] += c * li_taylor_coeff(b.u, m);
    }
  }
  Rat value = 0;
  for (const auto& [key, c] : lim) {
    if (c == 0) continue;
    if (key.second < 0 || key.first > 0)
      throw DomainError("divergent integration constant at z=0 (term order z^" +
                        std::to_string(key.second) + " log^" + std::to_string(key.first) + ")");
    value = c;
  }
  return value;
}

// Exact limit of F at z -> 1-. Conservative symbol algebra: contributions
// that are not plainly rational are tracked per symbol; if any survive, the
// limit is either divergent or not rational and we refuse.
Rat limit_at_1(const CFunction& F) {
  Rat value = 0;
  // symbol key: (kind, l, u, n); kind 0 = pole/divergent, 1 = zeta-type finite
  std::map<std::tuple<int, long, Word, unsigned>, Rat> sym;
  for (const auto& [b, c] : F) {
    if (b.u.empty()) {
      if (!b.c.is_p) {
        if (b.n == 0) value += c;  // z^k -> 1, log^n -> 0 for n >= 1
        continue;
      }
      long l = b.c.k;
      if (b.n > (unsigned)l) continue;  // log^n z ~ (z-1)^n beats the pole
      if (b.n == (unsigned)l) {
        // (1-z)^-n log^n(z)/n! -> (-1)^n/n!
        Rat v = Rat((b.n % 2) ? -1 : 1) / factorial(b.n);
        value += c * v;
      } else {
        sym[{0, l, b.u, b.n}] += c;
      }
      continue;
    }
    // nonempty word
    if (!b.c.is_p) {
      if (b.n >= 1) continue;  // log^n z kills any log(1-z)-type divergence
      if (b.u[0] == 0)
        sym[{1, 0, b.u, 0}] += c;  // convergent Li_u(1): finite, zeta-type
      else
        sym[{0, 0, b.u, 0}] += c;  // Li_{x1...}(1) diverges logarithmically
    } else {
      long l = b.c.k;
      if (b.n > (unsigned)l) continue;
      sym[{0, l, b.u, b.n}] += c;  // pole times Li_u
    }
  }
  for (const auto& [key, c] : sym) {
    if (c == 0) continue;
    if (std::get<0>(key) == 0)
      throw DomainError("divergent integration constant at z=1");
    throw DomainError("integration constant not rational (Li_[" +
                      std::get<2>(key).str() + "](1) survives)");
  }
  return value;
}

// Exact antiderivative of q(s) * Li_w(s) ds inside C{Li_w}; w is an arbitrary
// X-word. Recursion: integration by parts lowers |w| or moves the coefficient
// exponent toward the two primitive cases ds/s and ds/(1-s).
CFunction antideriv(const CoeffMonomial& q, const Word& w) {
  if (!q.is_p) {
    long k = q.k;
    if (k == -1)  // primitive: Li_{x0 w}
      return from_word(w.prepend(0));
    if (w.empty()) {
      CFunction r;
      cf_add(r, {CoeffMonomial::zpow(k + 1), Word(Alphabet::X), 0}, Rat(1) / Rat(k + 1));
      return r;
    }
    // int z^k Li_w = z^{k+1} Li_w/(k+1) - (1/(k+1)) int z^{k+1} Li'_w
    Rat inv = Rat(1) / Rat(k + 1);
    CFunction F = mul_cpoly({{CoeffMonomial::zpow(k + 1), inv}}, from_word(w));
    Word tail = w.subword(1, w.size() - 1);
    CPoly inner = (w[0] == 0) ? CPoly{{CoeffMonomial::zpow(k), Rat(1)}}
                              : normalize_coeff(k + 1, 1);
    for (const auto& [m, c] : inner) {
      CFunction G = antideriv(m, tail);
      for (const auto& [b, cb] : G) cf_add(F, b, -inv * c * cb);
    }
    return F;
  }
  long l = q.k;
  if (l == 1)  // primitive: Li_{x1 w}
    return from_word(w.prepend(1));
  if (w.empty()) {
    CFunction r;
    cf_add(r, {CoeffMonomial::ppow(l - 1), Word(Alphabet::X), 0}, Rat(1) / Rat(l - 1));
    return r;
  }
  // int (1-z)^-l Li_w = (1-z)^-(l-1) Li_w/(l-1) - (1/(l-1)) int (1-z)^-(l-1) Li'_w
  Rat inv = Rat(1) / Rat(l - 1);
  CFunction F = mul_cpoly({{CoeffMonomial::ppow(l - 1), inv}}, from_word(w));
  Word tail = w.subword(1, w.size() - 1);
  CPoly inner = (w[0] == 0) ? normalize_coeff(-1, (unsigned long)(l - 1))
                            : CPoly{{CoeffMonomial::ppow(l), Rat(1)}};
  for (const auto& [m, c] : inner) {
    CFunction G = antideriv(m, tail);
    for (const auto& [b, cb] : G) cf_add(F, b, -inv * c * cb);
  }
  return F;
}

CFunction iota_impl(const CFunction& f, bool omega0) {
  CPoly om = omega0 ? CPoly{{CoeffMonomial::zpow(-1), Rat(1)}}
                    : CPoly{{CoeffMonomial::ppow(1), Rat(1)}};
  CFunction result;
  for (const auto& [b, cb] : f) {
    CPoly qc = cpoly_mul({{b.c, Rat(1)}}, om);
    // Li_u log^n/n! = Li_{u sh x0^n}
    NCPoly words = shuffle_words(b.u, Word(Alphabet::X, std::vector<unsigned>(b.n, 0u)));
    CFunction F;
    for (const auto& [m, cm] : qc)
      for (const auto& [v, cv] : words.terms()) {
        CFunction A = antideriv(m, v);
        for (const auto& [be, ca] : A) cf_add(F, be, cm * cv * ca);
      }
    bool base_zero = !omega0 || ind(b) >= 1;
    Rat L = base_zero ? limit_at_0(F) : limit_at_1(F);
    for (const auto& [be, ca] : F) cf_add(result, be, cb * ca);
    cf_add(result, {CoeffMonomial::zpow(0), Word(Alphabet::X), 0}, -cb * L);
  }
  return result;
}

}  // namespace

CFunction iota0(const CFunction& f) { return iota_impl(f, true); }
CFunction iota1(const CFunction& f) { return iota_impl(f, false); }

// --------------------------------------------------------------------- eval

std::complex<double> eval(const CFunction& f, std::complex<double> z, unsigned long N) {
  std::complex<double> total = 0;
  for (const auto& [b, c] : f) {
    std::complex<double> v = to_double(c);
    if (b.c.is_p) {
      if (z == 1.0) throw DomainError("eval: pole at z=1");
      v *= std::pow(1.0 - z, (double)-b.c.k);
    } else if (b.c.k != 0) {
      if (z == 0.0 && b.c.k < 0) throw DomainError("eval: pole at z=0");
      v *= std::pow(z, (double)b.c.k);
    }
    if (b.n) {
      if (z == 0.0) throw DomainError("eval: log singularity at z=0");
      std::complex<double> lg = std::log(z);
      double fact = 1;
      for (unsigned i = 1; i <= b.n; ++i) fact *= i;
      v *= std::pow(lg, (double)b.n) / fact;
    }
    if (!b.u.empty()) {
      if (std::abs(z) >= 1.0)
        throw DomainError("eval: series requires |z| < 1");
      std::vector<unsigned long> s;
      unsigned long run = 0;
      for (std::size_t i = 0; i < b.u.size(); ++i) {
        if (b.u[i] == 0) ++run;
        else { s.push_back(run + 1); run = 0; }
      }
      std::size_t r = s.size();
      // g[j] = H_{s_j..s_r}(n-1), updated incrementally; g[r] = 1 (empty tail)
      std::vector<double> g(r + 1, 0.0);
      g[r] = 1.0;
      std::complex<double> zn = 1.0, li = 0.0;
      for (unsigned long n = 1; n <= N; ++n) {
        zn *= z;
        double p1 = std::pow((double)n, -(double)s[0]);
        li += zn * p1 * g[1];
        // update suffix harmonic numbers from n-1 to n (use old deeper values)
        for (std::size_t j = 1; j < r; ++j)
          g[j] += std::pow((double)n, -(double)s[j]) * ((j + 1 < r + 1) ? g[j + 1] : 1.0);
      }
      v *= li;
    }
    total += v;
  }
  return total;
}

}  // namespace starli
