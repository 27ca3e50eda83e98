#include "typik/model.hpp"

#include <algorithm>
#include <numeric>

#include "typik/error.hpp"

namespace typik {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so named constants represent their classes.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Roles implied by a role chain, directly or through role inclusions and conjunctions.
std::vector<bool> non_simple_roles(const ProgramFacts& f) {
  std::vector<bool> ns(f.roles.size(), false);
  for (const auto& c : f.sub_rchain) ns[c.sup] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto mark = [&](int r) {
      if (!ns[r]) changed = ns[r] = true;
    };
    for (const auto& i : f.sub_role) {
      if (ns[i.sub]) mark(i.sup);
    }
    for (const auto& c : f.sub_rconj) {
      if (ns[c.first] || ns[c.second]) mark(c.sup);
    }
  }
  return ns;
}

}  // namespace

RankedModel extract_model(const AnswerSet& s) {
  const ProgramFacts& f = s.facts();
  const int M = f.constant_count();
  const int NI = f.n_named;
  UnionFind uf(M);
  for (int c = 0; c < M; ++c) {
    for (int d = 0; d < NI; ++d) {
      if (s.inst(c, ClassRef{true, d})) uf.unite(c, d);
    }
  }

  RankedModel m;
  std::vector<int> element_of_root(M, -1);
  for (int a = 0; a < NI; ++a) {
    int r = uf.find(a);
    if (element_of_root[r] < 0) {
      element_of_root[r] = static_cast<int>(m.domain.size());
      m.domain.push_back({"[" + f.individuals[r].str() + "]", r});
    }
    m.individual_of[f.individuals[a]] = element_of_root[r];
  }
  const int NC = static_cast<int>(f.concepts.size());
  for (int c = NI; c < M; ++c) {
    if (uf.find(c) < NI) continue;
    bool any = false;
    for (int k = 0; k < NC && !any; ++k) any = s.inst(c, ClassRef{false, k});
    if (!any) continue;
    for (int copy = 1; copy <= 2; ++copy) {
      m.domain.push_back({f.constants[c].symbol + "#" + std::to_string(copy), c});
    }
  }

  const int N = static_cast<int>(m.domain.size());
  for (int e = 0; e < N; ++e) m.rank.push_back(s.rank(m.domain[e].constant));
  for (int k = 2; k < NC; ++k) {
    auto& ext = m.concept_ext[f.concepts[k]];
    for (int e = 0; e < N; ++e) {
      if (s.inst(m.domain[e].constant, ClassRef{false, k})) ext.insert(e);
    }
  }
  // Loops of non-simple roles follow triples, so chains stay closed on the copies.
  const auto non_simple = non_simple_roles(f);
  for (size_t r = 0; r < f.roles.size(); ++r) {
    auto& ext = m.role_ext[f.roles[r]];
    const int ri = static_cast<int>(r);
    for (int d = 0; d < N; ++d) {
      for (int e = 0; e < N; ++e) {
        int cd = m.domain[d].constant;
        int ce = m.domain[e].constant;
        bool loop = s.self(cd, ri) || (non_simple[r] && s.triple(cd, ri, cd));
        if (d == e ? loop : s.triple(cd, ri, ce)) ext.insert({d, e});
      }
    }
  }
  return m;
}

namespace {

const std::set<std::pair<int, int>>& role_of(const RankedModel& m, const RoleName& r) {
  static const std::set<std::pair<int, int>> empty;
  auto it = m.role_ext.find(r);
  return it == m.role_ext.end() ? empty : it->second;
}

std::set<int> all_elements(const RankedModel& m) {
  std::set<int> out;
  for (size_t e = 0; e < m.size(); ++e) out.insert(static_cast<int>(e));
  return out;
}

}  // namespace

std::set<int> evaluate(const RankedModel& m, const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top:
      return all_elements(m);
    case K::Bot:
      return {};
    case K::Atom: {
      auto it = m.concept_ext.find(c.name());
      return it == m.concept_ext.end() ? std::set<int>{} : it->second;
    }
    case K::Nominal: {
      auto it = m.individual_of.find(c.individual());
      if (it == m.individual_of.end()) throw Error("individual missing from model: " + c.individual().str());
      return {it->second};
    }
    case K::Conj: {
      auto l = evaluate(m, c.left());
      auto r = evaluate(m, c.right());
      std::set<int> out;
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::inserter(out, out.end()));
      return out;
    }
    case K::Exists: {
      auto filler = evaluate(m, c.filler());
      std::set<int> out;
      for (auto [d, e] : role_of(m, c.role())) {
        if (filler.count(e)) out.insert(d);
      }
      return out;
    }
    case K::Self: {
      std::set<int> out;
      for (auto [d, e] : role_of(m, c.role())) {
        if (d == e) out.insert(d);
      }
      return out;
    }
    case K::Typ: {
      auto arg = evaluate(m, c.argument());
      if (arg.empty()) return {};
      int lowest = m.rank[*std::min_element(arg.begin(), arg.end(), [&](int a, int b) {
        return m.rank[a] < m.rank[b];
      })];
      std::set<int> out;
      for (int e : arg) {
        if (m.rank[e] == lowest) out.insert(e);
      }
      return out;
    }
  }
  return {};
}

namespace {

int individual(const RankedModel& m, const IndividualName& a) {
  auto it = m.individual_of.find(a);
  if (it == m.individual_of.end()) throw Error("individual missing from model: " + a.str());
  return it->second;
}

std::string label(const RankedModel& m, int e) { return m.domain[e].label; }

struct AxiomChecker {
  const RankedModel& m;
  std::string why;

  bool operator()(const ConceptInclusion& a) {
    auto l = evaluate(m, a.lhs);
    auto r = evaluate(m, a.rhs);
    for (int e : l) {
      if (!r.count(e)) {
        why = label(m, e) + " is in the left side but not the right side";
        return false;
      }
    }
    return true;
  }
  bool operator()(const RoleInclusion& a) {
    const auto& sup = role_of(m, a.super);
    for (const auto& p : role_of(m, a.sub)) {
      if (!sup.count(p)) return pair_missing(p, a.super);
    }
    return true;
  }
  bool operator()(const RoleChain& a) {
    const auto& first = role_of(m, a.first);
    const auto& second = role_of(m, a.second);
    const auto& sup = role_of(m, a.super);
    for (auto [x, y] : first) {
      for (auto it = second.lower_bound({y, 0}); it != second.end() && it->first == y; ++it) {
        if (!sup.count({x, it->second})) return pair_missing({x, it->second}, a.super);
      }
    }
    return true;
  }
  bool operator()(const RoleConj& a) {
    const auto& second = role_of(m, a.second);
    const auto& sup = role_of(m, a.super);
    for (const auto& p : role_of(m, a.first)) {
      if (second.count(p) && !sup.count(p)) return pair_missing(p, a.super);
    }
    return true;
  }
  bool operator()(const ConceptProductLhs& a) {
    auto first = evaluate(m, a.first);
    auto second = evaluate(m, a.second);
    const auto& sup = role_of(m, a.super);
    for (int x : first) {
      for (int y : second) {
        if (!sup.count({x, y})) return pair_missing({x, y}, a.super);
      }
    }
    return true;
  }
  bool operator()(const ConceptProductRhs& a) {
    auto first = evaluate(m, a.first);
    auto second = evaluate(m, a.second);
    for (auto [x, y] : role_of(m, a.sub)) {
      if (!first.count(x) || !second.count(y)) {
        why = "(" + label(m, x) + ", " + label(m, y) + ") is not in the product";
        return false;
      }
    }
    return true;
  }
  bool operator()(const ConceptAssertion& a) {
    int e = individual(m, a.individual);
    if (evaluate(m, a.description).count(e)) return true;
    why = label(m, e) + " is not an instance";
    return false;
  }
  bool operator()(const RoleAssertion& a) {
    std::pair<int, int> p{individual(m, a.subject), individual(m, a.object)};
    if (role_of(m, a.role).count(p)) return true;
    return pair_missing(p, a.role);
  }

  bool pair_missing(std::pair<int, int> p, const RoleName& r) {
    why = "(" + label(m, p.first) + ", " + label(m, p.second) + ") is not in " + r.str();
    return false;
  }
};

}  // namespace

bool satisfies(const RankedModel& m, const Axiom& a, std::string* why) {
  AxiomChecker checker{m, {}};
  bool ok = std::visit(checker, a);
  if (why) *why = checker.why;
  return ok;
}

std::vector<ModelViolation> check_model(const RankedModel& m, const KnowledgeBase& kb) {
  std::vector<ModelViolation> out;
  auto axioms = kb.axioms();
  for (size_t i = 0; i < axioms.size(); ++i) {
    std::string why;
    if (!satisfies(m, axioms[i], &why)) out.push_back({i, to_string(axioms[i]), why});
  }
  return out;
}

bool satisfies(const RankedModel& m, const Query& q) {
  Concept c = Concept::atom(q.concept_name);
  if (q.kind == Query::Kind::Typ) c = Concept::typ(c);
  return evaluate(m, c).count(individual(m, q.individual)) > 0;
}

}  // namespace typik
