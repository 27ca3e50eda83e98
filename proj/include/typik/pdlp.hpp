#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "typik/kb.hpp"
#include "typik/minimal.hpp"

namespace typik {

struct Literal {
  int var;
  bool positive;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Positive disjunctive logic program: every clause has a positive literal.
struct Pdlp {
  std::vector<std::string> vars;
  std::vector<std::vector<Literal>> clauses;

  // Throws InvalidPdlp.
  void validate() const;
  std::string to_string(const Literal& l) const;
  std::string to_string() const;
  // All literals over the variables, positive before negative.
  std::vector<Literal> literals() const;
};

// One clause per line, space-separated literals, '-' marks negation, '#' starts a comment.
Pdlp parse_pdlp(std::string_view text);
Pdlp read_pdlp_file(const std::string& path);
// Parses "p" or "-p" against the program's variables.
Literal parse_literal(const Pdlp& p, std::string_view text);

struct PdlpReduction {
  KnowledgeBase kb;
  std::vector<ConceptName> positive;  // P_h, by variable
  std::vector<ConceptName> negative;  // name defined from Ex U.(T(Top) & P_h), by variable
  IndividualName individual;

  // Query whose T-minimal entailment coincides with minimal entailment of the literal.
  Query query(const Literal& l) const;
};

PdlpReduction reduce(const Pdlp& p);

// Every subset-minimal model satisfies the literal. Throws CapExceeded above cap variables.
bool min_entails_bruteforce(const Pdlp& p, const Literal& l, int cap = 12);
std::vector<std::vector<bool>> minimal_models(const Pdlp& p, int cap = 12);

struct CrossCheck {
  Literal literal;
  bool bruteforce;
  Answer reasoner;
  bool agree;
  std::string trace;
};

std::vector<CrossCheck> cross_check(const Pdlp& p, ReasonerOptions options = {});
CrossCheck cross_check(const Pdlp& p, const Literal& l, ReasonerOptions options = {});

// Random program with 1..max_vars variables and 1..max_clauses clauses.
Pdlp random_pdlp(std::mt19937_64& rng, int max_vars = 5, int max_clauses = 6);

}  // namespace typik
