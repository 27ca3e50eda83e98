#include "typik/normalizer.hpp"

#include <algorithm>

namespace typik {

bool NormalizedKB::is_fresh(const ConceptName& c) const {
  return origin(c).has_value();
}

std::optional<Concept> NormalizedKB::origin(const ConceptName& c) const {
  for (const auto& [name, original_concept] : fresh_names) {
    if (name == c) return original_concept;
  }
  return std::nullopt;
}

std::vector<ConceptName> NormalizedKB::names_for(const Concept& original) const {
  std::vector<ConceptName> out;
  for (const auto& [name, original_concept] : fresh_names) {
    if (original_concept == original) out.push_back(name);
  }
  return out;
}

namespace {

using K = Concept::Kind;

bool named(const Concept& c) { return c.is_named(); }

bool normal_inclusion(const Concept& l, const Concept& r) {
  if (named(l)) {
    switch (r.kind()) {
      case K::Atom:
      case K::Top:
      case K::Bot:
      case K::Nominal:
      case K::Self:
        return true;
      case K::Exists:
        return named(r.filler());
      case K::Typ:
        return named(r.argument());
      default:
        return false;
    }
  }
  if (!named(r)) return false;
  switch (l.kind()) {
    case K::Conj:
      return named(l.left()) && named(l.right());
    case K::Exists:
      return named(l.filler());
    case K::Nominal:
    case K::Self:
      return true;
    case K::Typ:
      return named(l.argument());
    default:
      return false;
  }
}

class Normalizer {
 public:
  explicit Normalizer(const KnowledgeBase& kb) {
    out_.base = kb;
    out_.kb.signature = kb.signature;
  }

  NormalizedKB run() {
    const auto& base = out_.base;
    for (const auto& ax : base.tbox) inclusion(ax.lhs, ax.rhs);
    for (const auto& ax : base.rbox) role_axiom(ax);
    for (const auto& ax : base.abox) assertion(ax);
    return std::move(out_);
  }

 private:
  ConceptName fresh(const Concept& origin) {
    std::string spelling;
    do {
      spelling = "_n" + std::to_string(counter_++);
    } while (out_.kb.signature.contains_spelling(spelling));
    ConceptName n(spelling);
    out_.kb.signature.add(n);
    out_.fresh_names.emplace_back(n, origin);
    return n;
  }

  void emit(const Concept& l, const Concept& r) { out_.kb.tbox.push_back({l, r}); }

  // A with C [= A; used where C occurs negatively.
  Concept lhs_name(const Concept& c) {
    if (named(c)) return c;
    if (c.kind() == K::Nominal || c.kind() == K::Typ) return eq_name(c);
    if (auto it = lhs_cache_.find(c); it != lhs_cache_.end()) return it->second;
    Concept a = Concept::atom(fresh(c));
    lhs_cache_.emplace(c, a);
    inclusion(c, a);
    return a;
  }

  // A with A [= C; used where C occurs positively.
  Concept rhs_name(const Concept& c) {
    if (named(c)) return c;
    if (c.kind() == K::Nominal || c.kind() == K::Typ) return eq_name(c);
    if (auto it = rhs_cache_.find(c); it != rhs_cache_.end()) return it->second;
    Concept a = Concept::atom(fresh(c));
    rhs_cache_.emplace(c, a);
    inclusion(a, c);
    return a;
  }

  // A with A == C.
  Concept eq_name(const Concept& c) {
    if (named(c)) return c;
    if (auto it = eq_cache_.find(c); it != eq_cache_.end()) return it->second;
    Concept a = Concept::atom(fresh(c));
    eq_cache_.emplace(c, a);
    inclusion(c, a);
    inclusion(a, c);
    return a;
  }

  Concept typ_of_named(const Concept& typ) {
    const Concept& arg = typ.argument();
    if (named(arg)) return typ;
    return Concept::typ(eq_name(arg));
  }

  void inclusion(const Concept& l, const Concept& r) {
    if (normal_inclusion(l, r)) {
      emit(l, r);
      return;
    }
    if (named(l)) {
      switch (r.kind()) {
        case K::Conj:
          inclusion(l, r.left());
          inclusion(l, r.right());
          return;
        case K::Exists:
          emit(l, Concept::exists(r.role(), rhs_name(r.filler())));
          return;
        case K::Typ:
          emit(l, typ_of_named(r));
          return;
        default:
          break;
      }
    }
    if (named(r)) {
      switch (l.kind()) {
        case K::Conj: {
          Concept a = lhs_name(l.left());
          Concept b = lhs_name(l.right());
          emit(Concept::conj(a, b), r);
          return;
        }
        case K::Exists:
          emit(Concept::exists(l.role(), lhs_name(l.filler())), r);
          return;
        case K::Typ:
          emit(typ_of_named(l), r);
          return;
        default:
          break;
      }
    }
    // Both sides complex: L [= X, X [= R.
    auto it = split_cache_.find(l);
    if (it == split_cache_.end()) {
      it = split_cache_.emplace(l, Concept::atom(fresh(l))).first;
      inclusion(l, it->second);
    }
    inclusion(it->second, r);
  }

  void role_axiom(const RoleAxiom& ax) {
    if (const auto* p = std::get_if<ConceptProductLhs>(&ax)) {
      out_.kb.rbox.push_back(ConceptProductLhs{lhs_name(p->first), lhs_name(p->second), p->super});
    } else if (const auto* p = std::get_if<ConceptProductRhs>(&ax)) {
      out_.kb.rbox.push_back(ConceptProductRhs{p->sub, rhs_name(p->first), rhs_name(p->second)});
    } else {
      out_.kb.rbox.push_back(ax);
    }
  }

  void assertion(const Assertion& ax) {
    if (const auto* c = std::get_if<ConceptAssertion>(&ax)) {
      if (named(c->description)) {
        out_.kb.abox.push_back(ax);
        return;
      }
      auto it = abox_cache_.find(c->description);
      if (it == abox_cache_.end()) {
        it = abox_cache_.emplace(c->description, Concept::atom(fresh(c->description))).first;
        inclusion(it->second, c->description);
      }
      out_.kb.abox.push_back(ConceptAssertion{it->second, c->individual});
      return;
    }
    out_.kb.abox.push_back(ax);
  }

  NormalizedKB out_;
  size_t counter_ = 0;
  std::map<Concept, Concept> lhs_cache_;
  std::map<Concept, Concept> rhs_cache_;
  std::map<Concept, Concept> eq_cache_;
  std::map<Concept, Concept> split_cache_;
  std::map<Concept, Concept> abox_cache_;
};

}  // namespace

bool is_normal(const Axiom& a) {
  return std::visit(
      [](const auto& ax) -> bool {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return normal_inclusion(ax.lhs, ax.rhs);
        } else if constexpr (std::is_same_v<T, ConceptProductLhs> ||
                             std::is_same_v<T, ConceptProductRhs>) {
          return named(ax.first) && named(ax.second);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return named(ax.description);
        } else {
          return true;
        }
      },
      a);
}

NormalizedKB normalize(const KnowledgeBase& kb) { return Normalizer(kb).run(); }

}  // namespace typik
