#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starli/rational.hpp"
#include "starli/words.hpp"

namespace starli {

// Sparse noncommutative polynomial: finite map Word -> rational, no zero
// coefficients stored. All words must live over one alphabet.
class NCPoly {
 public:
  using Terms = std::map<Word, Rat>;

  NCPoly() = default;
  static NCPoly zero() { return NCPoly(); }
  static NCPoly one(Alphabet a = Alphabet::X);
  static NCPoly monomial(const Word& w, const Rat& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;  // max word length; 0 for the zero polynomial
  Rat coeff(const Word& w) const;

  void add_term(const Word& w, const Rat& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const Rat& c) const;
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

NCPoly conc(const NCPoly& p, const NCPoly& q);
NCPoly shuffle(const NCPoly& p, const NCPoly& q);
NCPoly shuffle_words(const Word& u, const Word& v);
NCPoly stuffle(const NCPoly& p, const NCPoly& q);  // Y0 alphabet only

NCPoly shuffle_power(const NCPoly& p, unsigned n);
NCPoly conc_power(const NCPoly& p, unsigned n);

// Shuffle coproduct of a word: formal sum of tensor pairs with coefficients.
std::map<std::pair<Word, Word>, Rat> coproduct_shuffle(const Word& w);

// Linear extension of pi_Y_word: words ending in x0 are sent to 0.
NCPoly pi_Y(const NCPoly& p);

// Tail elimination u x1 x0^n = sum_{m=0}^{n} (P_m x1) shuffle x0^m.
// Returns P_0..P_n (index = m). P_n has leading term u.
std::vector<NCPoly> x0_tail_eliminate(const Word& u, unsigned n);

// Text format: terms "coef * word" joined by "+"/"-"; word syntax as in
// parse_word, coefficient an integer or "p/q" (optional).
NCPoly parse_ncpoly(const std::string& text, Alphabet default_alph = Alphabet::X);

}  // namespace starli
