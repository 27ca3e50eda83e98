#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "typik/kb.hpp"

namespace typik {

struct NormalizedKB {
  // Axioms in normal form over the original signature extended with fresh names.
  KnowledgeBase kb;
  // Fresh concept names with the concept each one stands for, in creation order.
  std::vector<std::pair<ConceptName, Concept>> fresh_names;
  // The input of normalize.
  KnowledgeBase base;

  const KnowledgeBase& as_kb() const { return kb; }
  bool is_fresh(const ConceptName& c) const;
  std::optional<Concept> origin(const ConceptName& c) const;
  // Fresh names introduced for the given original concept.
  std::vector<ConceptName> names_for(const Concept& original) const;
};

// True when the axiom has one of the normal-form shapes.
bool is_normal(const Axiom& a);

// Structural transformation into normal form; kb must be valid.
NormalizedKB normalize(const KnowledgeBase& kb);

}  // namespace typik
