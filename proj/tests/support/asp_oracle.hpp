#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace typik::testing {

// Ground atom: predicate (with a leading '-' for strong negation) followed by arguments.
using GroundAtom = std::vector<std::string>;

// Naive ground evaluator for the clingo subset the encoder emits (facts, normal rules,
// constraints, strong negation, intervals, arithmetic comparisons).
class AspProgram {
 public:
  explicit AspProgram(const std::string& text);

  struct StableModel {
    std::map<std::string, int> rank;  // constant -> rank
    std::set<GroundAtom> atoms;
  };

  // All stable models, found by checking every rank/aux-instance guess against the reduct.
  std::vector<StableModel> stable_models() const;

  // Least model of the rules without default negation plus the extra facts.
  std::set<GroundAtom> least_model(const std::vector<GroundAtom>& extra) const;
  // Stability of a candidate: it equals the least model of its reduct, violates no
  // constraint and contains no complementary pair.
  bool is_stable(const std::set<GroundAtom>& candidate) const;

  struct Term {
    enum Kind { Const, Var, Plus, Minus, Range } kind;
    std::string a;
    std::string b;
  };
  struct Lit {
    enum Kind { Pos, Neg, Cmp } kind;
    std::string pred;
    std::vector<Term> args;
    std::string op;
  };
  struct Rule {
    bool constraint = false;
    Lit head;
    std::vector<Lit> body;
  };

 private:
  std::vector<Rule> rules_;
  std::vector<GroundAtom> facts_;
};

}  // namespace typik::testing
