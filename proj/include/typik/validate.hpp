#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typik/concept.hpp"
#include "typik/kb.hpp"

namespace typik {

struct Violation {
  enum class Kind { NestedTypicality, ExtendedConceptInProduct, UnknownName };
  Kind kind;
  // Position in KnowledgeBase::axioms() order.
  size_t axiom_index;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const KnowledgeBase& kb);

std::string to_string(Violation::Kind k);

struct TypicalitySignature {
  // Distinct Typ arguments of the KB in first-occurrence order.
  std::vector<Concept> concepts_ck;
  // concepts_ck plus the query concept of a TypQuery when new.
  std::vector<Concept> concepts_tkq;
  size_t max_k = 0;

  // Rank upper bound n.
  size_t upper_bound() const { return concepts_tkq.size(); }
};

TypicalitySignature typicality_signature(const KnowledgeBase& kb,
                                         const std::optional<Query>& query = std::nullopt);

}  // namespace typik
