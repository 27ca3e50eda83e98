#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "typik/names.hpp"

namespace typik {

// Immutable (extended) concept expression. Copies share structure.
// Equality and ordering are structural; conjunction is an ordered pair.
class Concept {
 public:
  enum class Kind { Atom, Top, Bot, Nominal, Conj, Exists, Self, Typ };

  // Atom("Top") and Atom("Bot") yield the distinguished Top/Bot nodes.
  static Concept atom(ConceptName name);
  static Concept top();
  static Concept bot();
  static Concept nominal(IndividualName individual);
  static Concept conj(Concept left, Concept right);
  static Concept exists(RoleName role, Concept filler);
  static Concept self(RoleName role);
  static Concept typ(Concept argument);

  Kind kind() const;

  // Atom, Top and Bot.
  const ConceptName& name() const;
  // Nominal.
  const IndividualName& individual() const;
  // Exists and Self.
  const RoleName& role() const;
  // Conj.
  const Concept& left() const;
  const Concept& right() const;
  // Exists.
  const Concept& filler() const;
  // Typ.
  const Concept& argument() const;

  // Atom, Top or Bot.
  bool is_named() const;
  // Contains a Typ node.
  bool is_extended() const;
  // Largest number of Typ nodes on one root-to-leaf path.
  int typ_depth() const;
  // Number of nodes.
  size_t size() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

  struct Node;

 private:
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Concept::Node {
  Kind kind;
  ConceptName name;
  IndividualName individual;
  RoleName role;
  std::vector<Concept> children;
  bool extended = false;
  int typ_depth = 0;
  size_t size = 1;
};

// Surface syntax used by the parser and printer.
std::string to_string(const Concept& c);

// Every Typ argument in c, in pre-order.
void collect_typ_arguments(const Concept& c, std::vector<Concept>& out);

}  // namespace typik
