#include "random_kb.hpp"

#include <algorithm>
#include <set>

namespace typik::testing {

namespace {

struct Gen {
  std::mt19937_64& rng;
  std::vector<ConceptName> concepts;
  std::vector<RoleName> roles;
  std::vector<IndividualName> individuals;
  std::vector<ConceptName> typ;
  std::vector<RoleName> simple;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  Concept name() { return Concept::atom(concepts[uniform(0, static_cast<int>(concepts.size()) - 1)]); }
  // Occasionally Top or Bot.
  Concept name_or_special() {
    if (chance(8)) return Concept::top();
    if (chance(5)) return Concept::bot();
    return name();
  }
  RoleName role() { return roles[uniform(0, static_cast<int>(roles.size()) - 1)]; }
  RoleName simple_role() { return simple[uniform(0, static_cast<int>(simple.size()) - 1)]; }
  IndividualName individual() { return individuals[uniform(0, static_cast<int>(individuals.size()) - 1)]; }
  Concept typ_arg() { return Concept::atom(typ[uniform(0, static_cast<int>(typ.size()) - 1)]); }

  ConceptInclusion inclusion() {
    for (;;) {
      switch (uniform(0, 11)) {
        case 0:
          return {name_or_special(), name_or_special()};
        case 1:
          if (individuals.empty()) break;
          return {name(), Concept::nominal(individual())};
        case 2:
          if (individuals.empty()) break;
          return {Concept::nominal(individual()), name()};
        case 3:
          return {Concept::conj(name(), name()), name_or_special()};
        case 4:
          if (roles.empty()) break;
          return {Concept::exists(role(), name_or_special()), name()};
        case 5:
          if (roles.empty()) break;
          return {name(), Concept::exists(role(), name_or_special())};
        case 6:
          if (simple.empty()) break;
          return {Concept::self(simple_role()), name()};
        case 7:
          if (simple.empty()) break;
          return {name(), Concept::self(simple_role())};
        case 8:
        case 9:
          if (typ.empty()) break;
          return {name_or_special(), Concept::typ(typ_arg())};
        case 10:
        case 11:
          if (typ.empty()) break;
          return {Concept::typ(typ_arg()), name_or_special()};
      }
    }
  }

  RoleAxiom role_axiom() {
    switch (uniform(0, 4)) {
      case 0:
        return RoleInclusion{role(), role()};
      case 1:
        return RoleChain{role(), role(), role()};
      case 2:
        return RoleConj{role(), role(), role()};
      case 3:
        return ConceptProductLhs{name(), name(), role()};
      default:
        return ConceptProductRhs{role(), name(), name()};
    }
  }

  Assertion assertion() {
    if (!roles.empty() && chance(35)) return RoleAssertion{role(), individual(), individual()};
    return ConceptAssertion{name(), individual()};
  }
};

// Roles implied by a chain, directly or through inclusions and conjunctions.
std::set<RoleName> non_simple(const std::vector<RoleAxiom>& rbox) {
  std::set<RoleName> out;
  for (const auto& a : rbox) {
    if (auto* c = std::get_if<RoleChain>(&a)) out.insert(c->super);
  }
  for (size_t before = 0; before != out.size();) {
    before = out.size();
    for (const auto& a : rbox) {
      if (auto* i = std::get_if<RoleInclusion>(&a); i && out.count(i->sub)) out.insert(i->super);
      if (auto* c = std::get_if<RoleConj>(&a); c && (out.count(c->first) || out.count(c->second))) {
        out.insert(c->super);
      }
    }
  }
  return out;
}

// Drops role conjunctions over non-simple roles and returns the simple roles, so that Self
// restrictions and role conjunctions only use simple roles.
std::vector<RoleName> make_admissible(std::vector<RoleAxiom>& rbox, const std::vector<RoleName>& roles) {
  for (;;) {
    auto ns = non_simple(rbox);
    auto bad = std::find_if(rbox.begin(), rbox.end(), [&](const RoleAxiom& a) {
      auto* c = std::get_if<RoleConj>(&a);
      return c && (ns.count(c->first) || ns.count(c->second));
    });
    if (bad == rbox.end()) {
      std::vector<RoleName> simple;
      for (const auto& r : roles) {
        if (!ns.count(r)) simple.push_back(r);
      }
      return simple;
    }
    rbox.erase(bad);
  }
}

}  // namespace

KnowledgeBase random_normal_kb(std::mt19937_64& rng, const RandomKbShape& shape) {
  Gen g{rng, {}, {}, {}, {}};
  int nc = g.uniform(1, shape.max_concepts);
  int nr = g.uniform(0, shape.max_roles);
  int ni = g.uniform(1, shape.max_individuals);
  for (int i = 0; i < nc; ++i) g.concepts.emplace_back("A" + std::to_string(i));
  for (int i = 0; i < nr; ++i) g.roles.emplace_back("R" + std::to_string(i));
  for (int i = 0; i < ni; ++i) g.individuals.emplace_back("a" + std::to_string(i));
  int nt = g.uniform(0, std::min(shape.max_typ, nc));
  std::vector<ConceptName> pool = g.concepts;
  std::shuffle(pool.begin(), pool.end(), rng);
  g.typ.assign(pool.begin(), pool.begin() + nt);

  KnowledgeBase kb;
  for (const auto& c : g.concepts) kb.signature.add(c);
  for (const auto& r : g.roles) kb.signature.add(r);
  for (const auto& a : g.individuals) kb.signature.add(a);
  if (nr > 0) {
    int n = g.uniform(0, shape.max_rbox);
    for (int i = 0; i < n; ++i) kb.rbox.push_back(g.role_axiom());
  }
  g.simple = make_admissible(kb.rbox, g.roles);
  int nt_axioms = g.uniform(0, shape.max_tbox);
  for (int i = 0; i < nt_axioms; ++i) kb.tbox.push_back(g.inclusion());
  // Every T-concept occurs in some axiom.
  for (const auto& t : g.typ) {
    if (g.chance(50)) {
      kb.tbox.push_back({Concept::typ(Concept::atom(t)), g.name_or_special()});
    } else {
      kb.tbox.push_back({g.name(), Concept::typ(Concept::atom(t))});
    }
  }
  int na = g.uniform(0, shape.max_abox);
  for (int i = 0; i < na; ++i) kb.abox.push_back(g.assertion());
  return kb;
}

NormalizedKB as_normalized(const KnowledgeBase& kb) { return NormalizedKB{kb, {}, kb}; }

Query random_query(std::mt19937_64& rng, const KnowledgeBase& kb) {
  const auto& cs = kb.signature.concepts();
  const auto& is = kb.signature.individuals();
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  IndividualName a = is[pick(is.size())];
  ConceptName c = cs[pick(cs.size())];
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) return Query::typ(a, c);
  return Query::inst(a, c);
}

}  // namespace typik::testing
