#include "typik/concept.hpp"

#include <stdexcept>

namespace typik {

namespace {

Concept::Node make_node(Concept::Kind kind) {
  Concept::Node n;
  n.kind = kind;
  return n;
}

}  // namespace

Concept Concept::atom(ConceptName name) {
  if (name.str() == kTopSpelling) return top();
  if (name.str() == kBotSpelling) return bot();
  auto n = make_node(Kind::Atom);
  n.name = std::move(name);
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept Concept::top() {
  static const Concept t = [] {
    auto n = make_node(Kind::Top);
    n.name = top_name();
    return Concept(std::make_shared<const Node>(std::move(n)));
  }();
  return t;
}

Concept Concept::bot() {
  static const Concept b = [] {
    auto n = make_node(Kind::Bot);
    n.name = bot_name();
    return Concept(std::make_shared<const Node>(std::move(n)));
  }();
  return b;
}

Concept Concept::nominal(IndividualName individual) {
  auto n = make_node(Kind::Nominal);
  n.individual = std::move(individual);
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept Concept::conj(Concept left, Concept right) {
  auto n = make_node(Kind::Conj);
  n.extended = left.is_extended() || right.is_extended();
  n.typ_depth = std::max(left.typ_depth(), right.typ_depth());
  n.size = 1 + left.size() + right.size();
  n.children = {std::move(left), std::move(right)};
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept Concept::exists(RoleName role, Concept filler) {
  auto n = make_node(Kind::Exists);
  n.role = std::move(role);
  n.extended = filler.is_extended();
  n.typ_depth = filler.typ_depth();
  n.size = 1 + filler.size();
  n.children = {std::move(filler)};
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept Concept::self(RoleName role) {
  auto n = make_node(Kind::Self);
  n.role = std::move(role);
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept Concept::typ(Concept argument) {
  auto n = make_node(Kind::Typ);
  n.extended = true;
  n.typ_depth = 1 + argument.typ_depth();
  n.size = 1 + argument.size();
  n.children = {std::move(argument)};
  return Concept(std::make_shared<const Node>(std::move(n)));
}

Concept::Kind Concept::kind() const { return node_->kind; }

const ConceptName& Concept::name() const {
  if (!is_named()) throw std::logic_error("Concept::name on a complex concept");
  return node_->name;
}

const IndividualName& Concept::individual() const {
  if (kind() != Kind::Nominal) throw std::logic_error("Concept::individual on a non-nominal");
  return node_->individual;
}

const RoleName& Concept::role() const {
  if (kind() != Kind::Exists && kind() != Kind::Self) {
    throw std::logic_error("Concept::role on a concept without a role");
  }
  return node_->role;
}

const Concept& Concept::left() const {
  if (kind() != Kind::Conj) throw std::logic_error("Concept::left on a non-conjunction");
  return node_->children[0];
}

const Concept& Concept::right() const {
  if (kind() != Kind::Conj) throw std::logic_error("Concept::right on a non-conjunction");
  return node_->children[1];
}

const Concept& Concept::filler() const {
  if (kind() != Kind::Exists) throw std::logic_error("Concept::filler on a non-existential");
  return node_->children[0];
}

const Concept& Concept::argument() const {
  if (kind() != Kind::Typ) throw std::logic_error("Concept::argument on a non-typicality");
  return node_->children[0];
}

bool Concept::is_named() const {
  return kind() == Kind::Atom || kind() == Kind::Top || kind() == Kind::Bot;
}

bool Concept::is_extended() const { return node_->extended; }

int Concept::typ_depth() const { return node_->typ_depth; }

size_t Concept::size() const { return node_->size; }

bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.individual <=> y.individual; c != 0) return c;
  if (auto c = x.role <=> y.role; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (size_t i = 0; i < x.children.size(); ++i) {
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

bool needs_parens_as_operand(const Concept& c) { return c.kind() == Concept::Kind::Conj; }

void print(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case Concept::Kind::Atom:
    case Concept::Kind::Top:
    case Concept::Kind::Bot:
      out += c.name().str();
      break;
    case Concept::Kind::Nominal:
      out += "{" + c.individual().str() + "}";
      break;
    case Concept::Kind::Conj:
      print(c.left(), out);
      out += " & ";
      if (needs_parens_as_operand(c.right())) {
        out += "(";
        print(c.right(), out);
        out += ")";
      } else {
        print(c.right(), out);
      }
      break;
    case Concept::Kind::Exists:
      out += "Ex " + c.role().str() + ".";
      if (needs_parens_as_operand(c.filler())) {
        out += "(";
        print(c.filler(), out);
        out += ")";
      } else {
        print(c.filler(), out);
      }
      break;
    case Concept::Kind::Self:
      out += "Ex " + c.role().str() + ".Self";
      break;
    case Concept::Kind::Typ:
      out += "T(";
      print(c.argument(), out);
      out += ")";
      break;
  }
}

}  // namespace

std::string to_string(const Concept& c) {
  std::string out;
  print(c, out);
  return out;
}

void collect_typ_arguments(const Concept& c, std::vector<Concept>& out) {
  if (!c.is_extended()) return;
  switch (c.kind()) {
    case Concept::Kind::Typ:
      out.push_back(c.argument());
      collect_typ_arguments(c.argument(), out);
      break;
    case Concept::Kind::Conj:
      collect_typ_arguments(c.left(), out);
      collect_typ_arguments(c.right(), out);
      break;
    case Concept::Kind::Exists:
      collect_typ_arguments(c.filler(), out);
      break;
    default:
      break;
  }
}

}  // namespace typik
