#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "typik/engine.hpp"
#include "typik/kb.hpp"

namespace typik {

// Finite ranked interpretation; T is evaluated from ranks.
struct RankedModel {
  struct Element {
    std::string label;
    int constant;  // projection onto the program's constants
  };
  std::vector<Element> domain;
  std::map<ConceptName, std::set<int>> concept_ext;
  std::map<RoleName, std::set<std::pair<int, int>>> role_ext;
  std::vector<int> rank;
  std::map<IndividualName, int> individual_of;

  size_t size() const { return domain.size(); }
};

// Ranked model of the normalized KB built from an answer set: named constants merged by
// nominal membership, two copies of each unmerged auxiliary constant with an instance.
// Self-loops come from self atoms, and for roles implied by a chain also from triple(x, R, x).
RankedModel extract_model(const AnswerSet& s);

struct ModelViolation {
  size_t axiom_index;
  std::string axiom;
  std::string message;
};

// Extension of an arbitrary concept. Names missing from the model are empty.
std::set<int> evaluate(const RankedModel& m, const Concept& c);
bool satisfies(const RankedModel& m, const Axiom& a, std::string* why = nullptr);
// Every axiom of kb checked directly against the model semantics.
std::vector<ModelViolation> check_model(const RankedModel& m, const KnowledgeBase& kb);
bool satisfies(const RankedModel& m, const Query& q);

}  // namespace typik
