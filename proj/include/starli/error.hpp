#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace starli {

// Operation mathematically undefined for the given input (star of a non-proper
// series, pi_Y of a word ending in x0, divergent evaluation, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input; `offset` is the 0-based character position.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// An intermediate expansion exceeded the configured term budget.
struct TermBudgetError : std::runtime_error {
  explicit TermBudgetError(std::size_t budget)
      : std::runtime_error("term budget exceeded (" + std::to_string(budget) + " terms)") {}
};

// Global term budget for intermediate polynomial expansions (default 10^6).
std::size_t term_budget();
void set_term_budget(std::size_t n);
void check_term_budget(std::size_t nterms);

}  // namespace starli
