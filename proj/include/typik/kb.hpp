#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "typik/concept.hpp"
#include "typik/names.hpp"

namespace typik {

struct ConceptInclusion {
  Concept lhs;
  Concept rhs;
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
};

struct RoleInclusion {
  RoleName sub;
  RoleName super;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};

// first o second [= super
struct RoleChain {
  RoleName first;
  RoleName second;
  RoleName super;
  friend bool operator==(const RoleChain&, const RoleChain&) = default;
};

// first & second [= super
struct RoleConj {
  RoleName first;
  RoleName second;
  RoleName super;
  friend bool operator==(const RoleConj&, const RoleConj&) = default;
};

// first x second [= super
struct ConceptProductLhs {
  Concept first;
  Concept second;
  RoleName super;
  friend bool operator==(const ConceptProductLhs&, const ConceptProductLhs&) = default;
};

// sub [= first x second
struct ConceptProductRhs {
  RoleName sub;
  Concept first;
  Concept second;
  friend bool operator==(const ConceptProductRhs&, const ConceptProductRhs&) = default;
};

struct ConceptAssertion {
  Concept description;
  IndividualName individual;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
  RoleName role;
  IndividualName subject;
  IndividualName object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using RoleAxiom =
    std::variant<RoleInclusion, RoleChain, RoleConj, ConceptProductLhs, ConceptProductRhs>;
using Assertion = std::variant<ConceptAssertion, RoleAssertion>;
using Axiom = std::variant<ConceptInclusion, RoleInclusion, RoleChain, RoleConj,
                           ConceptProductLhs, ConceptProductRhs, ConceptAssertion,
                           RoleAssertion>;

Axiom to_axiom(const RoleAxiom& a);
Axiom to_axiom(const Assertion& a);
std::string to_string(const Axiom& a);

// Declared names in declaration order. Top and Bot are implicit members.
class Signature {
 public:
  // Returns false when the name was already present.
  bool add(const ConceptName& c);
  bool add(const RoleName& r);
  bool add(const IndividualName& i);

  bool contains(const ConceptName& c) const;
  bool contains(const RoleName& r) const;
  bool contains(const IndividualName& i) const;
  // Any category.
  bool contains_spelling(const std::string& s) const;

  // Declared concept names, without Top/Bot.
  const std::vector<ConceptName>& concepts() const { return concepts_; }
  // Top, Bot, then the declared concept names.
  std::vector<ConceptName> all_concepts() const;
  const std::vector<RoleName>& roles() const { return roles_; }
  const std::vector<IndividualName>& individuals() const { return individuals_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<ConceptName> concepts_;
  std::vector<RoleName> roles_;
  std::vector<IndividualName> individuals_;
};

struct KnowledgeBase {
  Signature signature;
  std::vector<ConceptInclusion> tbox;
  std::vector<RoleAxiom> rbox;
  std::vector<Assertion> abox;

  // TBox, then RBox, then ABox.
  std::vector<Axiom> axioms() const;
  size_t axiom_count() const { return tbox.size() + rbox.size() + abox.size(); }

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

struct Query {
  enum class Kind { Inst, Typ };
  Kind kind = Kind::Inst;
  IndividualName individual;
  ConceptName concept_name;

  static Query inst(IndividualName a, ConceptName c) { return {Kind::Inst, std::move(a), std::move(c)}; }
  static Query typ(IndividualName a, ConceptName c) { return {Kind::Typ, std::move(a), std::move(c)}; }

  friend bool operator==(const Query&, const Query&) = default;
};

std::string to_string(const Query& q);

// Applies f to every concept expression occurring in the axiom.
template <class F>
void for_each_concept(const Axiom& a, F&& f) {
  std::visit(
      [&](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          f(ax.lhs);
          f(ax.rhs);
        } else if constexpr (std::is_same_v<T, ConceptProductLhs> ||
                             std::is_same_v<T, ConceptProductRhs>) {
          f(ax.first);
          f(ax.second);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          f(ax.description);
        }
      },
      a);
}

}  // namespace typik
