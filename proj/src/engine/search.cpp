#include <algorithm>

#include "detail.hpp"
#include "typik/engine.hpp"
#include "typik/error.hpp"

namespace typik {

using detail::below;
using detail::bit;
using detail::Compiled;
using detail::highest;
using detail::lowest;
using detail::Propagator;
using detail::State;

Budget::Budget(Limits limits) : limits_(limits), start_(std::chrono::steady_clock::now()) {}

void Budget::tick() {
  ++nodes_;
  if (limits_.nodes && nodes_ > limits_.nodes) {
    throw BudgetExceeded("node budget of " + std::to_string(limits_.nodes) + " exhausted");
  }
  if (limits_.seconds > 0 && (nodes_ & 255) == 0 && elapsed_seconds() > limits_.seconds) {
    throw BudgetExceeded("time budget of " + std::to_string(limits_.seconds) + " s exhausted");
  }
}

double Budget::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

// ---------------------------------------------------------------- constraints

int Domains::min(int constant) const { return lowest(dom_[constant]); }

int Domains::max(int constant) const { return highest(dom_[constant]); }

bool Domains::restrict(int constant, uint64_t mask) {
  uint64_t nd = dom_[constant] & mask;
  if (nd != dom_[constant]) {
    dom_[constant] = nd;
    changed_ = true;
  }
  return nd != 0;
}

namespace {

class StrictlyBelow : public Constraint {
 public:
  StrictlyBelow(std::vector<int> ids, std::vector<int> bound)
      : ids_(std::move(ids)), bound_(std::move(bound)) {}

  bool prune(Domains& d) const override {
    int candidates = 0;
    size_t last = 0;
    for (size_t i = 0; i < ids_.size(); ++i) {
      if (!d.restrict(ids_[i], below(bound_[i] + 1))) return false;
      if (d.min(ids_[i]) < bound_[i]) {
        ++candidates;
        last = i;
      }
    }
    if (candidates == 0) return false;
    if (candidates == 1) return d.restrict(ids_[last], below(bound_[last]));
    return true;
  }

 private:
  std::vector<int> ids_;
  std::vector<int> bound_;
};

class NotDominated : public Constraint {
 public:
  NotDominated(std::vector<int> ids, std::vector<std::vector<int>> front)
      : ids_(std::move(ids)), front_(std::move(front)) {}

  bool prune(Domains& d) const override {
    for (const auto& f : front_) {
      int candidates = 0;
      size_t last = 0;
      for (size_t i = 0; i < ids_.size(); ++i) {
        if (d.min(ids_[i]) < f[i]) {
          ++candidates;
          last = i;
        }
      }
      if (candidates == 0) return false;
      if (candidates == 1 && !d.restrict(ids_[last], below(f[last]))) return false;
    }
    return true;
  }

 private:
  std::vector<int> ids_;
  std::vector<std::vector<int>> front_;
};

class MemberOf : public Constraint {
 public:
  MemberOf(std::vector<int> ids, std::vector<std::vector<int>> vectors)
      : ids_(std::move(ids)), vectors_(std::move(vectors)) {}

  bool prune(Domains& d) const override {
    std::vector<uint64_t> allowed(ids_.size(), 0);
    bool any = false;
    for (const auto& v : vectors_) {
      bool ok = true;
      for (size_t i = 0; i < ids_.size() && ok; ++i) ok = (d.get(ids_[i]) & bit(v[i])) != 0;
      if (!ok) continue;
      any = true;
      for (size_t i = 0; i < ids_.size(); ++i) allowed[i] |= bit(v[i]);
    }
    if (!any) return false;
    for (size_t i = 0; i < ids_.size(); ++i) {
      if (!d.restrict(ids_[i], allowed[i])) return false;
    }
    return true;
  }

 private:
  std::vector<int> ids_;
  std::vector<std::vector<int>> vectors_;
};

}  // namespace

ConstraintPtr strictly_below(std::vector<int> constants, std::vector<int> bound) {
  return std::make_shared<StrictlyBelow>(std::move(constants), std::move(bound));
}

ConstraintPtr not_dominated(std::vector<int> constants, std::vector<std::vector<int>> front) {
  return std::make_shared<NotDominated>(std::move(constants), std::move(front));
}

ConstraintPtr member_of(std::vector<int> constants, std::vector<std::vector<int>> vectors) {
  return std::make_shared<MemberOf>(std::move(constants), std::move(vectors));
}

// ---------------------------------------------------------------- search

namespace {

bool contiguity_possible(const Compiled& P, const State& s) {
  uint64_t used = 0;
  for (int x = 0; x < P.M; ++x) {
    if (s.rank[x] >= 0) used |= bit(s.rank[x]);
  }
  if (!used) return true;
  uint64_t gaps = below(highest(used)) & ~used;
  return __builtin_popcountll(gaps) <= s.open_ranks;
}

bool forbidden_holds(const Compiled& P, const State& s, const QueryTarget& q) {
  if (q.typ) return s.typ.test(q.constant, P.tc_of_class[q.concept_index]);
  return s.inst.test(q.constant, q.concept_index);
}

}  // namespace

struct Engine::Search {
  Engine& eng;
  const Compiled& P;
  const SearchSpec& spec;
  bool canonical;
  const std::function<bool(const AnswerSet&)>& visit;

  // Propagation, constraint pruning and static checks; false when the node is dead.
  bool settle(State& s, Propagator& pr) {
    for (;;) {
      if (!pr.run()) return false;
      if (spec.constraints.empty()) break;
      std::vector<uint64_t> d = s.dom;
      Domains view(d);
      for (const auto& c : spec.constraints) {
        if (!c->prune(view)) return false;
      }
      if (!view.changed()) break;
      for (int x = 0; x < P.M; ++x) {
        if (d[x] != s.dom[x] && !pr.restrict(x, d[x])) return false;
      }
    }
    if (spec.forbid && forbidden_holds(P, s, *spec.forbid)) return false;
    return contiguity_possible(P, s);
  }

  bool root(State& s) {
    Propagator pr(P, s);
    for (size_t x = 0; x < spec.rank_domain.size(); ++x) pr.restrict(static_cast<int>(x), spec.rank_domain[x]);
    for (size_t t = 0; t < spec.flag_domain.size(); ++t) pr.restrict_flag(static_cast<int>(t), spec.flag_domain[t]);
    pr.seed_root();
    return settle(s, pr);
  }

  // Variable to branch on: constant index, or -(tc+1) for a flag; M when complete.
  int choose(const State& s) const {
    if (canonical) {
      for (int x = 0; x < P.M; ++x) {
        if (s.rank[x] < 0) return x;
      }
      for (int t = 0; t < P.NT; ++t) {
        if (s.fdom[t] == 3) return -(t + 1);
      }
      return P.M;
    }
    for (int t = 0; t < P.NT; ++t) {
      if (s.fdom[t] == 3) return -(t + 1);
    }
    auto best_in = [&](int lo, int hi) {
      int best = -1;
      int best_size = 0;
      for (int x = lo; x < hi; ++x) {
        if (s.rank[x] >= 0) continue;
        int size = __builtin_popcountll(s.dom[x]);
        if (best < 0 || size < best_size) {
          best = x;
          best_size = size;
        }
      }
      return best;
    };
    const auto& f = P.facts;
    if (int x = best_in(f.first_tc(), P.M); x >= 0) return x;
    if (int x = best_in(0, f.n_named); x >= 0) return x;
    if (int x = best_in(f.first_supex(), f.first_tc()); x >= 0) return x;
    return P.M;
  }

  // Returns false when the visitor asked to stop.
  bool dfs(const State& s) {
    eng.budget_->tick();
    ++eng.stats_.nodes;
    int v = choose(s);
    if (v == P.M) {
      if (!contiguity_possible(P, s)) return true;
      ++eng.stats_.solutions;
      return visit(AnswerSet(eng.prog_, std::make_shared<const State>(s)));
    }
    if (v < 0) {
      int t = -v - 1;
      for (uint8_t m : {uint8_t{1}, uint8_t{2}}) {
        State child = s;
        Propagator pr(P, child);
        if (pr.restrict_flag(t, m) && settle(child, pr)) {
          if (!dfs(child)) return false;
        } else {
          ++eng.stats_.conflicts;
        }
      }
      return true;
    }
    uint64_t d = s.dom[v];
    while (d) {
      int k = lowest(d);
      d &= d - 1;
      State child = s;
      Propagator pr(P, child);
      if (pr.restrict(v, bit(k)) && settle(child, pr)) {
        if (!dfs(child)) return false;
      } else {
        ++eng.stats_.conflicts;
      }
    }
    return true;
  }
};

Engine::Engine(const ProgramFacts& facts, std::shared_ptr<Budget> budget)
    : prog_(std::make_shared<const Compiled>(facts)),
      budget_(budget ? std::move(budget) : std::make_shared<Budget>()) {}

Engine::~Engine() = default;

const ProgramFacts& Engine::facts() const { return prog_->facts; }

std::optional<AnswerSet> Engine::find(const SearchSpec& spec) {
  std::optional<AnswerSet> found;
  std::function<bool(const AnswerSet&)> visit = [&](const AnswerSet& a) {
    found = a;
    return false;
  };
  Search search{*this, *prog_, spec, false, visit};
  State s(*prog_);
  if (search.root(s)) search.dfs(s);
  return found;
}

void Engine::enumerate(const SearchSpec& spec,
                       const std::function<bool(const AnswerSet&)>& visit) {
  Search search{*this, *prog_, spec, true, visit};
  State s(*prog_);
  if (search.root(s)) search.dfs(s);
}

std::optional<AnswerSet> Engine::saturate(const Guess& guess,
                                          std::optional<uint64_t> shuffle_seed) const {
  const Compiled& P = *prog_;
  if (static_cast<int>(guess.rank_of.size()) != P.M ||
      static_cast<int>(guess.aux_inst.size()) != P.NT) {
    throw Error("guess does not match the program's constants");
  }
  State s(P);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  Propagator pr(P, s, shuffle_seed ? &rng : nullptr);
  for (int x = 0; x < P.M; ++x) {
    int k = guess.rank_of[x];
    if (k < 0 || k > P.n) return std::nullopt;
    pr.restrict(x, bit(k));
  }
  for (int t = 0; t < P.NT; ++t) pr.restrict_flag(t, guess.aux_inst[t] ? 1 : 2);
  pr.seed_root();
  if (!pr.run() || !contiguity_possible(P, s)) return std::nullopt;
  return AnswerSet(prog_, std::make_shared<const State>(std::move(s)));
}

std::vector<AnswerSet> enumerate_answer_sets(const ProgramFacts& facts, Limits limits,
                                             size_t max_count) {
  Engine engine(facts, std::make_shared<Budget>(limits));
  std::vector<AnswerSet> out;
  engine.enumerate({}, [&](const AnswerSet& a) {
    out.push_back(a);
    return out.size() < max_count;
  });
  return out;
}

// ---------------------------------------------------------------- answer sets

const ProgramFacts& AnswerSet::facts() const { return prog_->facts; }

Guess AnswerSet::guess() const {
  Guess g;
  g.rank_of = state_->rank;
  for (int t = 0; t < prog_->NT; ++t) g.aux_inst.push_back(state_->fdom[t] == 1);
  return g;
}

int AnswerSet::rank(int constant) const { return state_->rank[constant]; }

bool AnswerSet::aux_instance(int tc) const { return state_->fdom[tc] == 1; }

bool AnswerSet::inst(int constant, ClassRef c) const {
  return state_->inst.test(constant, prog_->cls(c));
}

bool AnswerSet::neg_inst(int constant, int tc) const { return state_->ninst.test(constant, tc); }

bool AnswerSet::typ(int constant, int tc) const { return state_->typ.test(constant, tc); }

bool AnswerSet::triple(int x, int role, int y) const {
  return state_->out.test(role * prog_->M + x, y);
}

bool AnswerSet::self(int x, int role) const { return state_->self.test(x, role); }

bool AnswerSet::box_neg(int k, int tc) const { return (state_->box[tc] >> k) & 1; }

bool AnswerSet::neg_box_neg(int k, int tc) const { return (state_->nbox[tc] >> k) & 1; }

bool AnswerSet::holds(const QueryTarget& q) const { return forbidden_holds(*prog_, *state_, q); }

namespace {

std::string class_symbol(const Compiled& P, int c) {
  return c < P.NC ? P.facts.concept_symbols[c] : P.facts.constants[c - P.NC].symbol;
}

}  // namespace

std::vector<Atom> AnswerSet::atoms() const {
  const Compiled& P = *prog_;
  const State& s = *state_;
  const auto& sym = [&](int x) -> const std::string& { return P.facts.constants[x].symbol; };
  std::vector<Atom> out;
  for (int x = 0; x < P.M; ++x) {
    s.inst.each(x, [&](int c) { out.push_back({Pred::inst, {sym(x), class_symbol(P, c)}}); });
    s.ninst.each(x, [&](int t) {
      out.push_back({Pred::inst, {sym(x), class_symbol(P, P.tc_class[t])}, true});
    });
    s.typ.each(x, [&](int t) { out.push_back({Pred::typ, {sym(x), class_symbol(P, P.tc_class[t])}}); });
    for (int r = 0; r < P.NR; ++r) {
      s.out.each(r * P.M + x, [&](int y) {
        out.push_back({Pred::triple, {sym(x), P.facts.role_symbols[r], sym(y)}});
      });
      if (s.self.test(x, r)) out.push_back({Pred::self, {sym(x), P.facts.role_symbols[r]}});
    }
    out.push_back({Pred::rank, {sym(x), std::to_string(s.rank[x])}});
  }
  for (int t = 0; t < P.NT; ++t) {
    for (int k = 0; k < 64; ++k) {
      if ((s.box[t] >> k) & 1) {
        out.push_back({Pred::box_neg, {std::to_string(k), class_symbol(P, P.tc_class[t])}});
      }
      if ((s.nbox[t] >> k) & 1) {
        out.push_back({Pred::box_neg, {std::to_string(k), class_symbol(P, P.tc_class[t])}, true});
      }
    }
  }
  return out;
}

std::vector<Atom> AnswerSet::named_atoms() const {
  const Compiled& P = *prog_;
  const State& s = *state_;
  std::vector<Atom> out;
  for (int x = 0; x < P.NI; ++x) {
    const std::string& sx = P.facts.constants[x].symbol;
    s.inst.each(x, [&](int c) { out.push_back({Pred::inst, {sx, class_symbol(P, c)}}); });
    s.typ.each(x, [&](int t) { out.push_back({Pred::typ, {sx, class_symbol(P, P.tc_class[t])}}); });
  }
  return out;
}

}  // namespace typik
