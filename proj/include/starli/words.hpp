#pragma once
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace starli {

enum class Alphabet : std::uint8_t { X, Y0 };

// A letter: x0/x1 when alphabet==X (index in {0,1}), y_index when alphabet==Y0.
struct Letter {
  Alphabet alphabet;
  unsigned index;
  friend auto operator<=>(const Letter&, const Letter&) = default;
  std::string str() const;
};

// Immutable word over a single alphabet; empty word allowed (either alphabet).
class Word {
 public:
  Word() : alph_(Alphabet::X) {}
  explicit Word(Alphabet a) : alph_(a) {}
  Word(Alphabet a, std::vector<unsigned> idx) : alph_(a), idx_(std::move(idx)) {}

  Alphabet alphabet() const { return alph_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  unsigned operator[](std::size_t i) const { return idx_[i]; }
  const std::vector<unsigned>& indices() const { return idx_; }

  Letter letter(std::size_t i) const { return {alph_, idx_[i]}; }
  Word prepend(unsigned idx) const;
  Word append(unsigned idx) const;
  Word concat(const Word& o) const;
  Word subword(std::size_t pos, std::size_t len) const;

  // Length-free lexicographic order (prefix < extension); x0 < x1, y_i < y_j iff i < j.
  friend bool operator<(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.alph_ == b.alph_ && a.idx_ == b.idx_;
  }

  std::string str() const;  // "x0 x1 x1", "y2 y0", empty word -> "1"

 private:
  Alphabet alph_;
  std::vector<unsigned> idx_;
};

// Parse the CLI word syntax (whitespace-separated letters, "1" for the empty
// word). The alphabet is inferred; a bare "1" parses as an empty word over
// `default_alph`. Throws ParseError on malformed input or mixed alphabets.
Word parse_word(const std::string& text, Alphabet default_alph = Alphabet::X);

// y_{s1}...y_{sr} -> x0^{s1-1}x1 ... x0^{sr-1}x1; DomainError on any y_0.
Word pi_X(const Word& w);

// Inverse direction on single words: the Y-word if w is in {empty} u X*x1,
// nullopt if w ends in x0 (the kernel of pi_Y). ncpoly wraps this linearly.
std::optional<Word> pi_Y_word(const Word& w);

bool is_lyndon(const Word& w);

// All Lyndon words of length <= max_length over the given alphabet, in
// lexicographic order (Duval). For Y0 the alphabet is cut at index <= y_max.
std::vector<Word> lyndon_words(Alphabet a, std::size_t max_length, unsigned y_max = 4);

// Unique non-increasing factorization of w into Lyndon words.
std::vector<Word> lyndon_factorize(const Word& w);

}  // namespace starli
