#include "typik/validate.hpp"

#include <algorithm>

namespace typik {

namespace {

class Checker {
 public:
  Checker(const Signature& sig, ValidationReport& report) : sig_(sig), report_(report) {}

  void concept_names(const Concept& c, size_t index) {
    switch (c.kind()) {
      case Concept::Kind::Atom:
        if (!sig_.contains(c.name())) unknown("concept " + c.name().str(), index);
        break;
      case Concept::Kind::Nominal:
        if (!sig_.contains(c.individual())) unknown("individual " + c.individual().str(), index);
        break;
      case Concept::Kind::Conj:
        concept_names(c.left(), index);
        concept_names(c.right(), index);
        break;
      case Concept::Kind::Exists:
        role(c.role(), index);
        concept_names(c.filler(), index);
        break;
      case Concept::Kind::Self:
        role(c.role(), index);
        break;
      case Concept::Kind::Typ:
        concept_names(c.argument(), index);
        break;
      default:
        break;
    }
  }

  void role(const RoleName& r, size_t index) {
    if (!sig_.contains(r)) unknown("role " + r.str(), index);
  }

  void individual(const IndividualName& i, size_t index) {
    if (!sig_.contains(i)) unknown("individual " + i.str(), index);
  }

  void nesting(const Concept& c, size_t index) {
    if (c.typ_depth() > 1) {
      report_.violations.push_back({Violation::Kind::NestedTypicality, index,
                                    "nested typicality in " + to_string(c)});
    }
  }

  void product_operand(const Concept& c, size_t index) {
    if (c.is_extended()) {
      report_.violations.push_back({Violation::Kind::ExtendedConceptInProduct, index,
                                    "typicality inside a concept product: " + to_string(c)});
    }
  }

 private:
  void unknown(const std::string& what, size_t index) {
    report_.violations.push_back(
        {Violation::Kind::UnknownName, index, "undeclared " + what});
  }

  const Signature& sig_;
  ValidationReport& report_;
};

}  // namespace

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NestedTypicality:
      return "NestedTypicality";
    case Violation::Kind::ExtendedConceptInProduct:
      return "ExtendedConceptInProduct";
    case Violation::Kind::UnknownName:
      return "UnknownName";
  }
  return "?";
}

ValidationReport validate(const KnowledgeBase& kb) {
  ValidationReport report;
  Checker check(kb.signature, report);
  const auto axioms = kb.axioms();
  for (size_t i = 0; i < axioms.size(); ++i) {
    for_each_concept(axioms[i], [&](const Concept& c) {
      check.concept_names(c, i);
      check.nesting(c, i);
    });
    std::visit(
        [&](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, RoleInclusion>) {
            check.role(ax.sub, i);
            check.role(ax.super, i);
          } else if constexpr (std::is_same_v<T, RoleChain> || std::is_same_v<T, RoleConj>) {
            check.role(ax.first, i);
            check.role(ax.second, i);
            check.role(ax.super, i);
          } else if constexpr (std::is_same_v<T, ConceptProductLhs>) {
            check.product_operand(ax.first, i);
            check.product_operand(ax.second, i);
            check.role(ax.super, i);
          } else if constexpr (std::is_same_v<T, ConceptProductRhs>) {
            check.product_operand(ax.first, i);
            check.product_operand(ax.second, i);
            check.role(ax.sub, i);
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            check.individual(ax.individual, i);
          } else if constexpr (std::is_same_v<T, RoleAssertion>) {
            check.role(ax.role, i);
            check.individual(ax.subject, i);
            check.individual(ax.object, i);
          }
        },
        axioms[i]);
  }
  return report;
}

TypicalitySignature typicality_signature(const KnowledgeBase& kb,
                                         const std::optional<Query>& query) {
  TypicalitySignature sig;
  std::vector<Concept> found;
  for (const auto& ax : kb.axioms()) {
    for_each_concept(ax, [&](const Concept& c) { collect_typ_arguments(c, found); });
  }
  for (const auto& c : found) {
    if (std::find(sig.concepts_ck.begin(), sig.concepts_ck.end(), c) == sig.concepts_ck.end()) {
      sig.concepts_ck.push_back(c);
    }
  }
  sig.max_k = sig.concepts_ck.size();
  sig.concepts_tkq = sig.concepts_ck;
  if (query && query->kind == Query::Kind::Typ) {
    auto qc = Concept::atom(query->concept_name);
    if (std::find(sig.concepts_tkq.begin(), sig.concepts_tkq.end(), qc) ==
        sig.concepts_tkq.end()) {
      sig.concepts_tkq.push_back(qc);
    }
  }
  return sig;
}

}  // namespace typik
