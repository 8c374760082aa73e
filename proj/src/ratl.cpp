#include "starli/ratl.hpp"

#include <cctype>
#include <sstream>

#include "starli/error.hpp"

namespace starli {

namespace {

RatExprPtr node(RatExpr e) { return std::make_shared<const RatExpr>(std::move(e)); }

}  // namespace

RatExprPtr make_scalar(const Rat& c) {
  RatExpr e;
  e.kind = RatExpr::Kind::Scalar;
  e.scalar = c;
  return node(std::move(e));
}

RatExprPtr make_letter(Letter l) {
  RatExpr e;
  e.kind = RatExpr::Kind::Letter;
  e.letter = l;
  return node(std::move(e));
}

static RatExprPtr binary(RatExpr::Kind k, RatExprPtr a, RatExprPtr b) {
  RatExpr e;
  e.kind = k;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

RatExprPtr make_sum(RatExprPtr a, RatExprPtr b) { return binary(RatExpr::Kind::Sum, a, b); }
RatExprPtr make_conc(RatExprPtr a, RatExprPtr b) { return binary(RatExpr::Kind::Conc, a, b); }
RatExprPtr make_shuffle(RatExprPtr a, RatExprPtr b) {
  return binary(RatExpr::Kind::Shuffle, a, b);
}

RatExprPtr make_star(RatExprPtr a) {
  RatExpr e;
  e.kind = RatExpr::Kind::Star;
  e.lhs = std::move(a);
  return node(std::move(e));
}

static RatExprPtr make_pow(RatExpr::Kind k, RatExprPtr a, unsigned n) {
  RatExpr e;
  e.kind = k;
  e.lhs = std::move(a);
  e.power = n;
  return node(std::move(e));
}

RatExprPtr make_pow_conc(RatExprPtr a, unsigned n) {
  return make_pow(RatExpr::Kind::PowConc, std::move(a), n);
}
RatExprPtr make_pow_shuffle(RatExprPtr a, unsigned n) {
  return make_pow(RatExpr::Kind::PowShuffle, std::move(a), n);
}

std::string RatExpr::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Scalar: os << rat_str(scalar); break;
    case Kind::Letter: os << letter.str(); break;
    case Kind::Sum: os << "(" << lhs->str() << " + " << rhs->str() << ")"; break;
    case Kind::Conc: os << "(" << lhs->str() << " " << rhs->str() << ")"; break;
    case Kind::Shuffle: os << "(" << lhs->str() << " # " << rhs->str() << ")"; break;
    case Kind::Star: os << lhs->str() << "*"; break;
    case Kind::PowConc: os << lhs->str() << "^" << power; break;
    case Kind::PowShuffle: os << lhs->str() << "#^" << power; break;
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool eof() { skip(); return i >= s.size(); }
  char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
};

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& s) : lx{s} {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.i); }

  unsigned parse_uint() {
    lx.skip();
    if (lx.i >= lx.s.size() || !std::isdigit((unsigned char)lx.s[lx.i]))
      fail("expected integer");
    unsigned long n = 0;
    while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i]))
      n = n * 10 + (lx.s[lx.i++] - '0');
    return (unsigned)n;
  }

  RatExprPtr parse_atom() {
    char c = lx.peek();
    if (c == '(') {
      ++lx.i;
      auto e = parse_sum();
      if (lx.peek() != ')') fail("expected ')'");
      ++lx.i;
      return e;
    }
    if (c == 'x' || c == 'y') {
      std::size_t start = lx.i;
      ++lx.i;
      unsigned idx = parse_uint();
      if (c == 'x' && idx > 1) throw ParseError("x-letter index must be 0 or 1", start);
      return make_letter({c == 'x' ? Alphabet::X : Alphabet::Y0, idx});
    }
    if (std::isdigit((unsigned char)c)) {
      unsigned long p = parse_uint();
      Rat r((long)p);
      if (lx.peek() == '/') {
        ++lx.i;
        unsigned long q = parse_uint();
        if (q == 0) fail("zero denominator");
        r = Rat((long)p, (long)q);
        r.canonicalize();
      }
      return make_scalar(r);
    }
    fail("expected atom");
  }

  bool starts_atom() {
    if (lx.eof()) return false;
    char c = lx.peek();
    return c == '(' || c == 'x' || c == 'y' || std::isdigit((unsigned char)c);
  }

  RatExprPtr parse_factor() {
    auto e = parse_atom();
    while (true) {
      char c = lx.peek();
      if (c == '*') {
        ++lx.i;
        e = make_star(e);
      } else if (c == '^') {
        ++lx.i;
        e = make_pow(RatExpr::Kind::PowConc, e, parse_uint());
      } else {
        break;
      }
    }
    return e;
  }

  RatExprPtr parse_conc() {
    auto e = parse_factor();
    while (true) {
      if (lx.peek() == '.') { ++lx.i; e = make_conc(e, parse_factor()); continue; }
      if (starts_atom()) { e = make_conc(e, parse_factor()); continue; }
      break;
    }
    return e;
  }

  RatExprPtr parse_shuffle() {
    auto e = parse_conc();
    while (lx.peek() == '#') {
      ++lx.i;
      if (lx.peek() == '^') {
        ++lx.i;
        e = make_pow(RatExpr::Kind::PowShuffle, e, parse_uint());
      } else {
        e = make_shuffle(e, parse_conc());
      }
    }
    return e;
  }

  RatExprPtr parse_sum() {
    bool neg = false;
    if (lx.peek() == '-') { ++lx.i; neg = true; }
    auto e = parse_shuffle();
    if (neg) e = make_conc(make_scalar(-1), e);
    while (true) {
      char c = lx.peek();
      if (c != '+' && c != '-') break;
      ++lx.i;
      auto t = parse_shuffle();
      if (c == '-') t = make_conc(make_scalar(-1), t);
      e = make_sum(e, t);
    }
    return e;
  }
};

}  // namespace

RatExprPtr parse_ratexpr(const std::string& text) {
  Parser p(text);
  if (p.lx.eof()) throw ParseError("empty expression", 0);
  auto e = p.parse_sum();
  if (!p.lx.eof()) throw ParseError("unexpected input", p.lx.i);
  return e;
}

// ------------------------------------------------------------- LinRep

namespace {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, Rat(0))); }

Vec row_times_mat(const Vec& v, const Mat& m) {
  std::size_t n = m.empty() ? 0 : m[0].size();
  Vec r(n, Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

Vec mat_times_col(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

LinRep scalar_rep(const Rat& c) {
  LinRep r;
  r.dim = 1;
  r.beta = {Rat(1)};
  r.eta = {c};
  r.mu[0] = zeros(1, 1);
  r.mu[1] = zeros(1, 1);
  return r;
}

LinRep letter_rep(unsigned idx) {
  LinRep r;
  r.dim = 2;
  r.beta = {Rat(1), Rat(0)};
  r.eta = {Rat(0), Rat(1)};
  r.mu[0] = zeros(2, 2);
  r.mu[1] = zeros(2, 2);
  r.mu[idx][0][1] = 1;
  return r;
}

LinRep sum_rep(const LinRep& a, const LinRep& b) {
  LinRep r;
  r.dim = a.dim + b.dim;
  r.beta = a.beta;
  r.beta.insert(r.beta.end(), b.beta.begin(), b.beta.end());
  r.eta = a.eta;
  r.eta.insert(r.eta.end(), b.eta.begin(), b.eta.end());
  for (int x = 0; x < 2; ++x) {
    r.mu[x] = zeros(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) r.mu[x][i][j] = a.mu[x][i][j];
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) r.mu[x][a.dim + i][a.dim + j] = b.mu[x][i][j];
  }
  return r;
}

LinRep conc_rep(const LinRep& a, const LinRep& b) {
  // mu(x) = [[mu1(x), mu1... top-right eta1.beta2.mu2(x)], [0, mu2(x)]],
  // beta = [beta1, 0], eta = [eta1*(beta2.eta2); eta2].
  LinRep r;
  r.dim = a.dim + b.dim;
  r.beta = a.beta;
  r.beta.resize(r.dim, Rat(0));
  Rat c2 = dot(b.beta, b.eta);
  r.eta.resize(r.dim, Rat(0));
  for (std::size_t i = 0; i < a.dim; ++i) r.eta[i] = a.eta[i] * c2;
  for (std::size_t i = 0; i < b.dim; ++i) r.eta[a.dim + i] = b.eta[i];
  for (int x = 0; x < 2; ++x) {
    r.mu[x] = zeros(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) r.mu[x][i][j] = a.mu[x][i][j];
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) r.mu[x][a.dim + i][a.dim + j] = b.mu[x][i][j];
    Vec bm = row_times_mat(b.beta, b.mu[x]);  // beta2.mu2(x)
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) r.mu[x][i][a.dim + j] = a.eta[i] * bm[j];
  }
  return r;
}

LinRep star_rep(const LinRep& a) {
  // Requires <S|1> = beta.eta = 0. New initial/final state 0.
  LinRep r;
  r.dim = a.dim + 1;
  r.beta.assign(r.dim, Rat(0));
  r.beta[0] = 1;
  r.eta.assign(r.dim, Rat(0));
  r.eta[0] = 1;
  for (int x = 0; x < 2; ++x) {
    r.mu[x] = zeros(r.dim, r.dim);
    Vec bm = row_times_mat(a.beta, a.mu[x]);  // beta.mu(x)
    Vec me = mat_times_col(a.mu[x], a.eta);   // mu(x).eta
    r.mu[x][0][0] = dot(bm, a.eta);
    for (std::size_t j = 0; j < a.dim; ++j) r.mu[x][0][1 + j] = bm[j];
    for (std::size_t i = 0; i < a.dim; ++i) {
      r.mu[x][1 + i][0] = me[i];
      for (std::size_t j = 0; j < a.dim; ++j) r.mu[x][1 + i][1 + j] = a.mu[x][i][j];
    }
  }
  return r;
}

LinRep shuffle_rep(const LinRep& a, const LinRep& b) {
  // Kronecker: mu(x) = mu1(x) (x) I + I (x) mu2(x).
  LinRep r;
  r.dim = a.dim * b.dim;
  r.beta.resize(r.dim);
  r.eta.resize(r.dim);
  auto idx = [&](std::size_t i, std::size_t j) { return i * b.dim + j; };
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      r.beta[idx(i, j)] = a.beta[i] * b.beta[j];
      r.eta[idx(i, j)] = a.eta[i] * b.eta[j];
    }
  for (int x = 0; x < 2; ++x) {
    r.mu[x] = zeros(r.dim, r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        for (std::size_t k = 0; k < a.dim; ++k)
          r.mu[x][idx(i, j)][idx(k, j)] += a.mu[x][i][k];
        for (std::size_t l = 0; l < b.dim; ++l)
          r.mu[x][idx(i, j)][idx(i, l)] += b.mu[x][j][l];
      }
  }
  return r;
}

}  // namespace

LinRep compile(const RatExprPtr& e) {
  switch (e->kind) {
    case RatExpr::Kind::Scalar:
      return scalar_rep(e->scalar);
    case RatExpr::Kind::Letter:
      if (e->letter.alphabet != Alphabet::X)
        throw DomainError("rational series over Y are not supported: " + e->letter.str());
      return letter_rep(e->letter.index);
    case RatExpr::Kind::Sum:
      return sum_rep(compile(e->lhs), compile(e->rhs));
    case RatExpr::Kind::Conc:
      return conc_rep(compile(e->lhs), compile(e->rhs));
    case RatExpr::Kind::Shuffle:
      return shuffle_rep(compile(e->lhs), compile(e->rhs));
    case RatExpr::Kind::Star: {
      LinRep a = compile(e->lhs);
      if (dot(a.beta, a.eta) != 0)
        throw DomainError("star of non-proper series: " + e->lhs->str());
      return star_rep(a);
    }
    case RatExpr::Kind::PowConc: {
      LinRep r = scalar_rep(1);
      LinRep a = compile(e->lhs);
      for (unsigned i = 0; i < e->power; ++i) r = conc_rep(r, a);
      return r;
    }
    case RatExpr::Kind::PowShuffle: {
      LinRep r = scalar_rep(1);
      LinRep a = compile(e->lhs);
      for (unsigned i = 0; i < e->power; ++i) r = shuffle_rep(r, a);
      return r;
    }
  }
  throw DomainError("unreachable");
}

Rat coeff(const LinRep& r, const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::X)
    throw DomainError("coeff: unknown letter (Y alphabet)");
  Vec v = r.beta;
  for (std::size_t i = 0; i < w.size(); ++i) v = row_times_mat(v, r.mu[w[i]]);
  return dot(v, r.eta);
}

namespace {

void hom_rec(const LinRep& r, unsigned remaining, Vec v, std::vector<unsigned>& prefix,
             NCPoly& out) {
  bool all_zero = true;
  for (const auto& x : v)
    if (x != 0) { all_zero = false; break; }
  if (all_zero) return;
  if (remaining == 0) {
    out.add_term(Word(Alphabet::X, prefix), dot(v, r.eta));
    return;
  }
  for (unsigned x = 0; x < 2; ++x) {
    prefix.push_back(x);
    hom_rec(r, remaining - 1, row_times_mat(v, r.mu[x]), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

NCPoly hom_component(const LinRep& r, unsigned n) {
  NCPoly out;
  std::vector<unsigned> prefix;
  hom_rec(r, n, r.beta, prefix, out);
  return out;
}

NCPoly truncate(const LinRep& r, unsigned N) {
  NCPoly out;
  for (unsigned n = 0; n <= N; ++n) out += hom_component(r, n);
  return out;
}

namespace {

NCPoly filter_deg(const NCPoly& p, unsigned N) {
  NCPoly r;
  for (const auto& [w, c] : p.terms())
    if (w.size() <= N) r.add_term(w, c);
  return r;
}

}  // namespace

NCPoly expand_truncated(const RatExprPtr& e, unsigned N) {
  switch (e->kind) {
    case RatExpr::Kind::Scalar:
      return NCPoly::one() * e->scalar;
    case RatExpr::Kind::Letter: {
      if (e->letter.alphabet != Alphabet::X)
        throw DomainError("rational series over Y are not supported: " + e->letter.str());
      Word w(Alphabet::X, std::vector<unsigned>{e->letter.index});
      return filter_deg(NCPoly::monomial(w), N);
    }
    case RatExpr::Kind::Sum:
      return expand_truncated(e->lhs, N) + expand_truncated(e->rhs, N);
    case RatExpr::Kind::Conc:
      return filter_deg(conc(expand_truncated(e->lhs, N), expand_truncated(e->rhs, N)), N);
    case RatExpr::Kind::Shuffle:
      return filter_deg(shuffle(expand_truncated(e->lhs, N), expand_truncated(e->rhs, N)), N);
    case RatExpr::Kind::Star: {
      NCPoly s = expand_truncated(e->lhs, N);
      if (s.coeff(Word(Alphabet::X)) != 0)
        throw DomainError("star of non-proper series: " + e->lhs->str());
      NCPoly acc = NCPoly::one();
      for (unsigned i = 0; i < N; ++i) acc = NCPoly::one() + filter_deg(conc(s, acc), N);
      return acc;
    }
    case RatExpr::Kind::PowConc: {
      NCPoly s = expand_truncated(e->lhs, N);
      NCPoly acc = NCPoly::one();
      for (unsigned i = 0; i < e->power; ++i) acc = filter_deg(conc(acc, s), N);
      return acc;
    }
    case RatExpr::Kind::PowShuffle: {
      NCPoly s = expand_truncated(e->lhs, N);
      NCPoly acc = NCPoly::one();
      for (unsigned i = 0; i < e->power; ++i) acc = filter_deg(shuffle(acc, s), N);
      return acc;
    }
  }
  throw DomainError("unreachable");
}

bool lazard_check(unsigned N) {
  auto lhs = compile(parse_ratexpr("(x0 + x1)*"));
  auto rhs = compile(parse_ratexpr("(x0* x1)* x0*"));
  return truncate(lhs, N) == truncate(rhs, N);
}

}  // namespace starli
