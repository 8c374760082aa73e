#pragma once
#include <memory>
#include <string>
#include <vector>

#include "starli/ncpoly.hpp"

namespace starli {

// AST for rational expressions over X (stars/automata) and plain letters.
struct RatExpr;
using RatExprPtr = std::shared_ptr<const RatExpr>;

struct RatExpr {
  enum class Kind { Scalar, Letter, Sum, Conc, Star, Shuffle, PowConc, PowShuffle };
  Kind kind;
  Rat scalar;          // Scalar
  Letter letter{};     // Letter
  RatExprPtr lhs, rhs; // binary nodes / Star / Pow argument in lhs
  unsigned power = 0;  // PowConc / PowShuffle

  std::string str() const;
};

RatExprPtr make_scalar(const Rat& c);
RatExprPtr make_letter(Letter l);
RatExprPtr make_sum(RatExprPtr a, RatExprPtr b);
RatExprPtr make_conc(RatExprPtr a, RatExprPtr b);
RatExprPtr make_star(RatExprPtr a);
RatExprPtr make_shuffle(RatExprPtr a, RatExprPtr b);
RatExprPtr make_pow_conc(RatExprPtr a, unsigned n);
RatExprPtr make_pow_shuffle(RatExprPtr a, unsigned n);

// Grammar (precedence low -> high): '+' sum; '#' shuffle; juxtaposition / '.'
// concatenation; postfix '*' star, '^n' concatenation power, '#^n' shuffle
// power; atoms: letters, rationals p/q, parenthesized expressions.
RatExprPtr parse_ratexpr(const std::string& text);

// Weighted automaton (beta, mu, eta) over the X alphabet.
struct LinRep {
  std::size_t dim = 0;
  std::vector<Rat> beta;               // 1 x dim
  std::vector<std::vector<Rat>> mu[2]; // mu[letter] is dim x dim
  std::vector<Rat> eta;                // dim x 1
};

// Compiles to a linear representation. DomainError "star of non-proper
// series: <subexpr>" if any Star argument has nonzero constant term; letters
// outside X are rejected.
LinRep compile(const RatExprPtr& e);

Rat coeff(const LinRep& r, const Word& w);
NCPoly hom_component(const LinRep& r, unsigned n);
NCPoly truncate(const LinRep& r, unsigned N);

// Independent oracle: expand the expression tree directly over NCPoly,
// keeping words of length <= N only.
NCPoly expand_truncated(const RatExprPtr& e, unsigned N);

// Verifies truncate((x0+x1)*, N) == truncate((x0* x1)* x0*, N).
bool lazard_check(unsigned N);

}  // namespace starli
