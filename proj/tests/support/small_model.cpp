#include "small_model.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace typik::testing {

namespace {

// Literals are +-(var+1); kTrue and kFalse are constants.
constexpr int kTrue = 1 << 30;
constexpr int kFalse = -kTrue;

class Dpll {
 public:
  int new_var() { return ++vars_; }

  void add(std::vector<int> clause) {
    std::vector<int> c;
    for (int l : clause) {
      if (l == kTrue) return;
      if (l == kFalse) continue;
      if (std::find(c.begin(), c.end(), -l) != c.end()) return;
      if (std::find(c.begin(), c.end(), l) == c.end()) c.push_back(l);
    }
    if (c.empty()) unsat_ = true;
    clauses_.push_back(std::move(c));
  }

  int conj(int a, int b) {
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue) return b;
    if (b == kTrue) return a;
    int v = new_var();
    add({-v, a});
    add({-v, b});
    add({v, -a, -b});
    return v;
  }

  int disj(const std::vector<int>& ls) {
    std::vector<int> xs;
    for (int l : ls) {
      if (l == kTrue) return kTrue;
      if (l != kFalse) xs.push_back(l);
    }
    if (xs.empty()) return kFalse;
    if (xs.size() == 1) return xs[0];
    int v = new_var();
    std::vector<int> big{-v};
    for (int l : xs) {
      add({v, -l});
      big.push_back(l);
    }
    add(big);
    return v;
  }

  bool solve() {
    if (unsat_) return false;
    assign_.assign(vars_ + 1, 0);
    return search();
  }

  bool value(int l) const {
    if (l == kTrue) return true;
    if (l == kFalse) return false;
    int v = assign_[std::abs(l)];
    return l > 0 ? v > 0 : v < 0;
  }

 private:
  int lit_value(int l) const {
    int v = assign_[std::abs(l)];
    return l > 0 ? v : -v;
  }

  // Returns false on conflict; records assigned variables in trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int l : c) {
          int v = lit_value(l);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = l;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign_[std::abs(last)] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) assign_[v] = 0;
      return false;
    }
    int pick = 0;
    for (int v = 1; v <= vars_ && !pick; ++v) {
      if (assign_[v] == 0) pick = v;
    }
    if (!pick) return true;
    for (int val : {1, -1}) {
      assign_[pick] = val;
      if (search()) return true;
      assign_[pick] = 0;
    }
    for (int v : trail) assign_[v] = 0;
    return false;
  }

  int vars_ = 0;
  bool unsat_ = false;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> assign_;
};

struct Grounding {
  const KnowledgeBase& kb;
  int n;
  const std::vector<int>& rank;
  const std::map<IndividualName, int>& ind;
  Dpll sat;
  std::map<ConceptName, std::vector<int>> concept_vars;
  std::map<RoleName, std::vector<int>> role_vars;
  std::map<std::pair<Concept, int>, int> memo;

  Grounding(const KnowledgeBase& k, int size, const std::vector<int>& r,
            const std::map<IndividualName, int>& i)
      : kb(k), n(size), rank(r), ind(i) {
    for (const auto& c : kb.signature.concepts()) {
      auto& vs = concept_vars[c];
      for (int x = 0; x < n; ++x) vs.push_back(sat.new_var());
    }
    for (const auto& r : kb.signature.roles()) {
      auto& vs = role_vars[r];
      for (int x = 0; x < n * n; ++x) vs.push_back(sat.new_var());
    }
  }

  int role(const RoleName& r, int x, int y) { return role_vars.at(r)[x * n + y]; }

  int member(const Concept& c, int x) {
    auto key = std::make_pair(c, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int l = compute(c, x);
    memo.emplace(key, l);
    return l;
  }

  int compute(const Concept& c, int x) {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Top:
        return kTrue;
      case K::Bot:
        return kFalse;
      case K::Atom:
        return concept_vars.at(c.name())[x];
      case K::Nominal:
        return ind.at(c.individual()) == x ? kTrue : kFalse;
      case K::Conj:
        return sat.conj(member(c.left(), x), member(c.right(), x));
      case K::Exists: {
        std::vector<int> options;
        for (int y = 0; y < n; ++y) options.push_back(sat.conj(role(c.role(), x, y), member(c.filler(), y)));
        return sat.disj(options);
      }
      case K::Self:
        return role(c.role(), x, x);
      case K::Typ: {
        int l = member(c.argument(), x);
        for (int y = 0; y < n; ++y) {
          if (rank[y] < rank[x]) l = sat.conj(l, neg(member(c.argument(), y)));
        }
        return l;
      }
    }
    return kFalse;
  }

  static int neg(int l) { return l == kTrue ? kFalse : l == kFalse ? kTrue : -l; }

  void axiom(const Axiom& a) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            for (int e = 0; e < n; ++e) sat.add({neg(member(x.lhs, e)), member(x.rhs, e)});
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f) sat.add({-role(x.sub, e, f), role(x.super, e, f)});
          } else if constexpr (std::is_same_v<T, RoleChain>) {
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                for (int g = 0; g < n; ++g)
                  sat.add({-role(x.first, e, f), -role(x.second, f, g), role(x.super, e, g)});
          } else if constexpr (std::is_same_v<T, RoleConj>) {
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                sat.add({-role(x.first, e, f), -role(x.second, e, f), role(x.super, e, f)});
          } else if constexpr (std::is_same_v<T, ConceptProductLhs>) {
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f)
                sat.add({neg(member(x.first, e)), neg(member(x.second, f)), role(x.super, e, f)});
          } else if constexpr (std::is_same_v<T, ConceptProductRhs>) {
            for (int e = 0; e < n; ++e)
              for (int f = 0; f < n; ++f) {
                sat.add({-role(x.sub, e, f), member(x.first, e)});
                sat.add({-role(x.sub, e, f), member(x.second, f)});
              }
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            sat.add({member(x.description, ind.at(x.individual))});
          } else {
            sat.add({role(x.role, ind.at(x.subject), ind.at(x.object))});
          }
        },
        a);
  }

  RankedModel model() const {
    RankedModel m;
    for (int e = 0; e < n; ++e) m.domain.push_back({"e" + std::to_string(e), -1});
    m.rank = rank;
    for (const auto& [c, vs] : concept_vars) {
      auto& ext = m.concept_ext[c];
      for (int e = 0; e < n; ++e) {
        if (sat.value(vs[e])) ext.insert(e);
      }
    }
    for (const auto& [r, vs] : role_vars) {
      auto& ext = m.role_ext[r];
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
          if (sat.value(vs[e * n + f])) ext.insert({e, f});
    }
    m.individual_of = ind;
    return m;
  }
};

}  // namespace

std::optional<RankedModel> find_small_model(const KnowledgeBase& kb, int max_domain, int max_rank,
                                            SmallModelStats* stats) {
  const auto& individuals = kb.signature.individuals();
  const int ni = static_cast<int>(individuals.size());
  const auto axioms = kb.axioms();
  std::optional<RankedModel> found;

  // Individuals name elements 0..used-1 in first-use order (a restricted growth string).
  std::vector<int> naming(ni, 0);
  std::function<bool(int, int, int)> name_from = [&](int i, int used, int size) -> bool {
    if (i == ni) {
      if (used > size) return false;
      std::map<IndividualName, int> ind;
      for (int k = 0; k < ni; ++k) ind[individuals[k]] = naming[k];
      // Named elements take any rank; anonymous ones are interchangeable, so their ranks
      // are non-decreasing.
      std::vector<int> rank(size, 0);
      std::function<bool(int)> assign = [&](int e) -> bool {
        if (e == size) {
          if (stats) ++stats->rank_assignments, ++stats->sat_calls;
          Grounding g(kb, size, rank, ind);
          for (const auto& a : axioms) g.axiom(a);
          if (!g.sat.solve()) return false;
          found = g.model();
          return true;
        }
        int lo = e > used ? rank[e - 1] : 0;
        for (int r = lo; r <= max_rank; ++r) {
          rank[e] = r;
          if (assign(e + 1)) return true;
        }
        return false;
      };
      return assign(0);
    }
    for (int e = 0; e <= std::min(used, size - 1); ++e) {
      naming[i] = e;
      if (name_from(i + 1, std::max(used, e + 1), size)) return true;
    }
    return false;
  };

  for (int size = 1; size <= max_domain; ++size) {
    if (name_from(0, 0, size)) return found;
  }
  return std::nullopt;
}

}  // namespace typik::testing
