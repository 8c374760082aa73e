#include "starli/ncpoly.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

#include "starli/error.hpp"

namespace starli {

namespace {
std::atomic<std::size_t> g_term_budget{1000000};
}

std::size_t term_budget() { return g_term_budget.load(); }
void set_term_budget(std::size_t n) { g_term_budget.store(n); }
void check_term_budget(std::size_t nterms) {
  if (nterms > g_term_budget.load()) throw TermBudgetError(g_term_budget.load());
}

NCPoly NCPoly::one(Alphabet a) { return monomial(Word(a)); }

NCPoly NCPoly::monomial(const Word& w, const Rat& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

std::size_t NCPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Rat NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  check_term_budget(terms_.size());
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly NCPoly::operator*(const Rat& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) { os << "- "; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || w.empty()) {
      os << rat_str(a);
      if (!w.empty()) os << " * ";
    }
    if (!w.empty()) os << w.str();
  }
  return os.str();
}

namespace {

void require_same_alphabet(const NCPoly& p, const NCPoly& q) {
  for (const auto& [u, cu] : p.terms()) {
    if (u.empty()) continue;
    for (const auto& [v, cv] : q.terms()) {
      if (v.empty()) continue;
      if (u.alphabet() != v.alphabet()) throw DomainError("alphabet mismatch");
      return;
    }
    return;
  }
}

NCPoly shuffle_words_memo(const Word& u, const Word& v,
                          std::map<std::pair<Word, Word>, NCPoly>& memo) {
  if (u.empty()) return NCPoly::monomial(v);
  if (v.empty()) return NCPoly::monomial(u);
  auto key = std::make_pair(u, v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // ua sh vb = (u sh vb) a + (ua sh v) b
  Word up = u.subword(0, u.size() - 1), vp = v.subword(0, v.size() - 1);
  NCPoly r;
  NCPoly left = shuffle_words_memo(up, v, memo);
  for (const auto& [w, c] : left.terms()) r.add_term(w.append(u[u.size() - 1]), c);
  NCPoly right = shuffle_words_memo(u, vp, memo);
  for (const auto& [w, c] : right.terms()) r.add_term(w.append(v[v.size() - 1]), c);
  memo.emplace(std::move(key), r);
  return r;
}

NCPoly stuffle_words_memo(const Word& u, const Word& v,
                          std::map<std::pair<Word, Word>, NCPoly>& memo) {
  if (u.empty()) return NCPoly::monomial(v);
  if (v.empty()) return NCPoly::monomial(u);
  auto key = std::make_pair(u, v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // y_i u' st y_j v' = y_i(u' st y_j v') + y_j(y_i u' st v') + y_{i+j}(u' st v')
  Word ut = u.subword(1, u.size() - 1), vt = v.subword(1, v.size() - 1);
  NCPoly r;
  NCPoly p1 = stuffle_words_memo(ut, v, memo);
  for (const auto& [w, c] : p1.terms()) r.add_term(w.prepend(u[0]), c);
  NCPoly p2 = stuffle_words_memo(u, vt, memo);
  for (const auto& [w, c] : p2.terms()) r.add_term(w.prepend(v[0]), c);
  NCPoly p3 = stuffle_words_memo(ut, vt, memo);
  for (const auto& [w, c] : p3.terms()) r.add_term(w.prepend(u[0] + v[0]), c);
  memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

NCPoly conc(const NCPoly& p, const NCPoly& q) {
  require_same_alphabet(p, q);
  NCPoly r;
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) r.add_term(u.concat(v), cu * cv);
  return r;
}

NCPoly shuffle_words(const Word& u, const Word& v) {
  std::map<std::pair<Word, Word>, NCPoly> memo;
  return shuffle_words_memo(u, v, memo);
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
  require_same_alphabet(p, q);
  std::map<std::pair<Word, Word>, NCPoly> memo;
  NCPoly r;
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms())
      r += shuffle_words_memo(u, v, memo) * (cu * cv);
  return r;
}

NCPoly stuffle(const NCPoly& p, const NCPoly& q) {
  for (const auto& [w, c] : p.terms())
    if (!w.empty() && w.alphabet() != Alphabet::Y0)
      throw DomainError("stuffle is defined over Y0 only");
  for (const auto& [w, c] : q.terms())
    if (!w.empty() && w.alphabet() != Alphabet::Y0)
      throw DomainError("stuffle is defined over Y0 only");
  std::map<std::pair<Word, Word>, NCPoly> memo;
  NCPoly r;
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms())
      r += stuffle_words_memo(u, v, memo) * (cu * cv);
  return r;
}

NCPoly shuffle_power(const NCPoly& p, unsigned n) {
  NCPoly r = NCPoly::one(p.terms().empty() ? Alphabet::X : p.terms().begin()->first.alphabet());
  for (unsigned i = 0; i < n; ++i) r = shuffle(r, p);
  return r;
}

NCPoly conc_power(const NCPoly& p, unsigned n) {
  NCPoly r = NCPoly::one(p.terms().empty() ? Alphabet::X : p.terms().begin()->first.alphabet());
  for (unsigned i = 0; i < n; ++i) r = conc(r, p);
  return r;
}

std::map<std::pair<Word, Word>, Rat> coproduct_shuffle(const Word& w) {
  // Delta(w) = sum over subsequence splits of w into (left, right).
  std::map<std::pair<Word, Word>, Rat> r;
  std::size_t n = w.size();
  check_term_budget(std::size_t(1) << std::min<std::size_t>(n, 24));
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<unsigned> l, rgt;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? l : rgt).push_back(w[i]);
    r[{Word(w.alphabet(), std::move(l)), Word(w.alphabet(), std::move(rgt))}] += 1;
  }
  return r;
}

NCPoly pi_Y(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms())
    if (auto y = pi_Y_word(w)) r.add_term(*y, c);
  return r;
}

std::vector<NCPoly> x0_tail_eliminate(const Word& u, unsigned n) {
  // u x1 x0^n = (u x1) sh x0^n - sum_{k=1}^{n} (u sh x0^k) x1 x0^{n-k};
  // recurse on the trailing-x0 count, collecting coefficients of log-powers.
  std::vector<NCPoly> P(n + 1);
  if (n == 0) {
    P[0] = NCPoly::monomial(u);
    return P;
  }
  P[n] += NCPoly::monomial(u);  // the (u x1) sh x0^n term
  for (unsigned k = 1; k <= n; ++k) {
    Word x0_k(Alphabet::X, std::vector<unsigned>(k, 0u));
    NCPoly s = shuffle(NCPoly::monomial(u), NCPoly::monomial(x0_k));
    // each word v in s: v x1 x0^{n-k} expands recursively
    for (const auto& [v, c] : s.terms()) {
      auto sub = x0_tail_eliminate(v, n - k);
      for (unsigned m = 0; m <= n - k; ++m) P[m] -= sub[m] * c;
    }
  }
  return P;
}

NCPoly parse_ncpoly(const std::string& text, Alphabet default_alph) {
  NCPoly r;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial", i);
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    skip_ws();
    // optional coefficient: integer or p/q, optionally followed by '*'
    Rat c = 1;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit((unsigned char)text[i]) || text[i] == '/')) ++i;
      std::string num = text.substr(start, i - start);
      // A bare "1" that is the whole term means the empty word, not coefficient.
      skip_ws();
      bool at_term_end = i == text.size() || text[i] == '+' || text[i] == '-';
      if (num == "1" && at_term_end) {
        r.add_term(Word(default_alph), sign);
        continue;
      }
      try {
        c = Rat(num);
        c.canonicalize();
      } catch (...) {
        throw ParseError("bad coefficient", start);
      }
      if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
      if (i == text.size() || text[i] == '+' || text[i] == '-') {
        r.add_term(Word(default_alph), c * sign);
        continue;
      }
    }
    // word: letters until +/-/end
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string wtext = text.substr(start, i - start);
    if (wtext.find_first_not_of(" \t\n") == std::string::npos)
      throw ParseError("expected word", start);
    try {
      r.add_term(parse_word(wtext, default_alph), c * sign);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.offset);
    }
  }
  return r;
}

}  // namespace starli
