#include "starli/words.hpp"

#include <algorithm>
#include <sstream>

#include "starli/error.hpp"

namespace starli {

std::string Letter::str() const {
  return (alphabet == Alphabet::X ? "x" : "y") + std::to_string(index);
}

Word Word::prepend(unsigned idx) const {
  std::vector<unsigned> v;
  v.reserve(idx_.size() + 1);
  v.push_back(idx);
  v.insert(v.end(), idx_.begin(), idx_.end());
  return Word(alph_, std::move(v));
}

Word Word::append(unsigned idx) const {
  std::vector<unsigned> v = idx_;
  v.push_back(idx);
  return Word(alph_, std::move(v));
}

Word Word::concat(const Word& o) const {
  if (!empty() && !o.empty() && alph_ != o.alph_)
    throw DomainError("concatenation of words over different alphabets");
  std::vector<unsigned> v = idx_;
  v.insert(v.end(), o.idx_.begin(), o.idx_.end());
  return Word(empty() ? o.alph_ : alph_, std::move(v));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(alph_, std::vector<unsigned>(idx_.begin() + pos, idx_.begin() + pos + len));
}

bool operator<(const Word& a, const Word& b) {
  if (a.alph_ != b.alph_) return a.alph_ < b.alph_;
  return std::lexicographical_compare(a.idx_.begin(), a.idx_.end(), b.idx_.begin(),
                                      b.idx_.end());
}

std::string Word::str() const {
  if (idx_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) os << ' ';
    os << letter(i).str();
  }
  return os.str();
}

Word parse_word(const std::string& text, Alphabet default_alph) {
  std::vector<unsigned> idx;
  std::optional<Alphabet> alph;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c == '1' && !alph && idx.empty()) {
      ++i;
      skip_ws();
      if (i != text.size()) throw ParseError("unexpected input after empty word", i);
      return Word(default_alph);
    }
    if (c != 'x' && c != 'y') throw ParseError("expected letter", i);
    Alphabet a = (c == 'x') ? Alphabet::X : Alphabet::Y0;
    std::size_t start = i++;
    if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
      throw ParseError("expected letter index", i);
    unsigned n = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i]))
      n = n * 10 + (text[i++] - '0');
    if (a == Alphabet::X && n > 1) throw ParseError("x-letter index must be 0 or 1", start);
    if (alph && *alph != a) throw ParseError("mixed alphabets in word", start);
    alph = a;
    idx.push_back(n);
    skip_ws();
  }
  return Word(alph.value_or(default_alph), std::move(idx));
}

Word pi_X(const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::Y0)
    throw DomainError("pi_X expects a word over Y");
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    unsigned s = w[i];
    if (s == 0) throw DomainError("pi_X undefined on y_0");
    out.insert(out.end(), s - 1, 0u);
    out.push_back(1u);
  }
  return Word(Alphabet::X, std::move(out));
}

std::optional<Word> pi_Y_word(const Word& w) {
  if (!w.empty() && w.alphabet() != Alphabet::X)
    throw DomainError("pi_Y expects a word over X");
  if (w.empty()) return Word(Alphabet::Y0);
  if (w[w.size() - 1] == 0) return std::nullopt;
  std::vector<unsigned> out;
  unsigned run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      ++run;
    } else {
      out.push_back(run + 1);
      run = 0;
    }
  }
  return Word(Alphabet::Y0, std::move(out));
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.subword(i, w.size() - i))) return false;
  return true;
}

std::vector<Word> lyndon_words(Alphabet a, std::size_t max_length, unsigned y_max) {
  unsigned kmax = (a == Alphabet::X) ? 1 : y_max;
  std::vector<Word> out;
  // Duval's generation: next Lyndon word in lex order.
  std::vector<unsigned> v{0};
  while (true) {
    if (v.size() <= max_length) out.push_back(Word(a, v));
    // Extend periodically to max_length, then increment the last letter.
    std::vector<unsigned> t;
    for (std::size_t i = 0; t.size() < max_length; i = (i + 1) % v.size())
      t.push_back(v[i]);
    while (!t.empty() && t.back() == kmax) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    v = std::move(t);
  }
  return out;
}

std::vector<Word> lyndon_factorize(const Word& w) {
  std::vector<Word> out;
  std::size_t i = 0, n = w.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

}  // namespace starli
