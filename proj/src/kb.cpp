#include "typik/kb.hpp"

#include <algorithm>

namespace typik {

Axiom to_axiom(const RoleAxiom& a) {
  return std::visit([](const auto& x) -> Axiom { return x; }, a);
}

Axiom to_axiom(const Assertion& a) {
  return std::visit([](const auto& x) -> Axiom { return x; }, a);
}

namespace {

std::string operand(const Concept& c) {
  if (c.kind() == Concept::Kind::Conj) return "(" + to_string(c) + ")";
  return to_string(c);
}

std::string assertion_concept(const Concept& c) {
  if (c.is_named() || c.kind() == Concept::Kind::Typ || c.kind() == Concept::Kind::Nominal) {
    return to_string(c);
  }
  return "(" + to_string(c) + ")";
}

template <class T>
bool add_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) != v.end()) return false;
  v.push_back(x);
  return true;
}

}  // namespace

std::string to_string(const Axiom& a) {
  return std::visit(
      [](const auto& ax) -> std::string {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return to_string(ax.lhs) + " [= " + to_string(ax.rhs);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return ax.sub.str() + " [= " + ax.super.str();
        } else if constexpr (std::is_same_v<T, RoleChain>) {
          return ax.first.str() + " o " + ax.second.str() + " [= " + ax.super.str();
        } else if constexpr (std::is_same_v<T, RoleConj>) {
          return ax.first.str() + " & " + ax.second.str() + " [= " + ax.super.str();
        } else if constexpr (std::is_same_v<T, ConceptProductLhs>) {
          return operand(ax.first) + " x " + operand(ax.second) + " [= " + ax.super.str();
        } else if constexpr (std::is_same_v<T, ConceptProductRhs>) {
          return ax.sub.str() + " [= " + operand(ax.first) + " x " + operand(ax.second);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return assertion_concept(ax.description) + "(" + ax.individual.str() + ")";
        } else {
          return ax.role.str() + "(" + ax.subject.str() + ", " + ax.object.str() + ")";
        }
      },
      a);
}

bool Signature::add(const ConceptName& c) {
  if (c == top_name() || c == bot_name()) return false;
  return add_unique(concepts_, c);
}

bool Signature::add(const RoleName& r) { return add_unique(roles_, r); }

bool Signature::add(const IndividualName& i) { return add_unique(individuals_, i); }

bool Signature::contains(const ConceptName& c) const {
  return c == top_name() || c == bot_name() ||
         std::find(concepts_.begin(), concepts_.end(), c) != concepts_.end();
}

bool Signature::contains(const RoleName& r) const {
  return std::find(roles_.begin(), roles_.end(), r) != roles_.end();
}

bool Signature::contains(const IndividualName& i) const {
  return std::find(individuals_.begin(), individuals_.end(), i) != individuals_.end();
}

bool Signature::contains_spelling(const std::string& s) const {
  return contains(ConceptName(s)) || contains(RoleName(s)) || contains(IndividualName(s));
}

std::vector<ConceptName> Signature::all_concepts() const {
  std::vector<ConceptName> out{top_name(), bot_name()};
  out.insert(out.end(), concepts_.begin(), concepts_.end());
  return out;
}

std::vector<Axiom> KnowledgeBase::axioms() const {
  std::vector<Axiom> out;
  out.reserve(axiom_count());
  for (const auto& a : tbox) out.emplace_back(a);
  for (const auto& a : rbox) out.push_back(to_axiom(a));
  for (const auto& a : abox) out.push_back(to_axiom(a));
  return out;
}

std::string to_string(const Query& q) {
  if (q.kind == Query::Kind::Typ) {
    return "T(" + q.concept_name.str() + ")(" + q.individual.str() + ")";
  }
  return q.concept_name.str() + "(" + q.individual.str() + ")";
}

}  // namespace typik
