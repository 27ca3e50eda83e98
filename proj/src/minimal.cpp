#include "typik/minimal.hpp"

#include <algorithm>
#include <chrono>

#include "typik/error.hpp"

namespace typik {

RankProfile RankProfile::of(const AnswerSet& s) {
  const ProgramFacts& f = s.facts();
  RankProfile p;
  for (int t = 0; t < f.n_tc; ++t) p.concept_ranks.push_back({s.rank(f.tc_constant(t)), s.aux_instance(t)});
  for (int x = 0; x < f.n_named; ++x) p.individual_ranks.push_back(s.rank(x));
  return p;
}

nlohmann::json RankProfile::to_json(const ProgramFacts& f) const {
  nlohmann::json concepts = nlohmann::json::array();
  for (size_t t = 0; t < concept_ranks.size(); ++t) {
    concepts.push_back({{"concept", f.constant_notes[f.tc_constant(static_cast<int>(t))]},
                        {"rank", concept_ranks[t].rank},
                        {"instance", concept_ranks[t].instance}});
  }
  nlohmann::json individuals = nlohmann::json::object();
  for (size_t x = 0; x < individual_ranks.size(); ++x) {
    individuals[f.individuals[x].str()] = individual_ranks[x];
  }
  return {{"concepts", concepts}, {"individuals", individuals}};
}

std::vector<int> satisfiable_concepts(Engine& engine) {
  const ProgramFacts& f = engine.facts();
  std::vector<char> known(f.n_tc, 0);
  std::vector<int> out;
  for (int t = 0; t < f.n_tc; ++t) {
    if (known[t]) continue;
    SearchSpec spec;
    spec.flag_domain.assign(f.n_tc, 3);
    spec.flag_domain[t] = 1;
    if (auto s = engine.find(spec)) {
      for (int u = 0; u < f.n_tc; ++u) {
        if (s->aux_instance(u)) known[u] = 1;
      }
    }
  }
  for (int t = 0; t < f.n_tc; ++t) {
    if (known[t]) out.push_back(t);
  }
  return out;
}

bool t_complete(const AnswerSet& s, const std::vector<int>& satisfiable) {
  return std::all_of(satisfiable.begin(), satisfiable.end(),
                     [&](int t) { return s.aux_instance(t); });
}

std::vector<int> preference_constants(const ProgramFacts& f, const std::vector<int>& satisfiable) {
  std::vector<int> out;
  for (int t : satisfiable) out.push_back(f.tc_constant(t));
  return out;
}

SearchSpec t_complete_spec(const ProgramFacts& f, const std::vector<int>& satisfiable) {
  SearchSpec spec;
  spec.flag_domain.assign(f.n_tc, 2);
  for (int t : satisfiable) spec.flag_domain[t] = 1;
  return spec;
}

namespace {

std::vector<int> vector_of(const AnswerSet& s, const std::vector<int>& ids) {
  std::vector<int> v;
  for (int x : ids) v.push_back(s.rank(x));
  return v;
}

SearchSpec with(SearchSpec spec, ConstraintPtr c) {
  spec.constraints.push_back(std::move(c));
  return spec;
}

// Pareto front over the ranks of ids: find a vector outside the dominated region, then
// descend with strictly better vectors until none is realizable.
std::vector<FrontEntry> pareto_front(Engine& engine, const SearchSpec& base,
                                     const std::vector<int>& ids, bool count) {
  std::vector<FrontEntry> front;
  std::vector<std::vector<int>> vectors;
  for (;;) {
    auto s = vectors.empty() ? engine.find(base) : engine.find(with(base, not_dominated(ids, vectors)));
    if (!s) break;
    auto v = vector_of(*s, ids);
    while (auto better = engine.find(with(base, strictly_below(ids, v)))) {
      s = better;
      v = vector_of(*s, ids);
    }
    vectors.push_back(v);
    front.push_back({v, *s, std::nullopt});
  }
  std::sort(front.begin(), front.end(),
            [](const FrontEntry& a, const FrontEntry& b) { return a.vector < b.vector; });
  if (count) {
    for (auto& e : front) {
      uint64_t n = 0;
      engine.enumerate(with(base, member_of(ids, {e.vector})), [&](const AnswerSet&) {
        ++n;
        return true;
      });
      e.count = n;
    }
  }
  return front;
}

std::vector<std::vector<int>> vectors_of(const std::vector<FrontEntry>& front) {
  std::vector<std::vector<int>> out;
  for (const auto& e : front) out.push_back(e.vector);
  return out;
}

std::vector<int> named_constants(const ProgramFacts& f) {
  std::vector<int> out(f.n_named);
  for (int x = 0; x < f.n_named; ++x) out[x] = x;
  return out;
}

}  // namespace

std::vector<FrontEntry> t_minimal_front(Engine& engine, const std::vector<int>& satisfiable,
                                        bool count) {
  const ProgramFacts& f = engine.facts();
  auto front = pareto_front(engine, t_complete_spec(f, satisfiable),
                            preference_constants(f, satisfiable), count);
  if (front.empty()) {
    if (!engine.find({})) throw NoModel("inconsistent KB");
    throw NoTCompleteModel("no T-complete answer set");
  }
  return front;
}

std::vector<FrontEntry> abox_minimal_front(Engine& engine, const std::vector<int>& satisfiable,
                                           const std::vector<FrontEntry>& t_front, bool count) {
  const ProgramFacts& f = engine.facts();
  SearchSpec base = t_complete_spec(f, satisfiable);
  base.constraints.push_back(member_of(preference_constants(f, satisfiable), vectors_of(t_front)));
  return pareto_front(engine, base, named_constants(f), count);
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Entailed:
      return "entailed";
    case Answer::NotEntailed:
      return "not entailed";
    case Answer::NoModel:
      return "no model";
    case Answer::NoTCompleteModel:
      return "no T-complete model";
  }
  return "?";
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& p : witnesses) w.push_back(p.to_json(*facts));
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : falsifying_atoms) atoms.push_back(typik::to_string(a));
  nlohmann::json j = {{"query", typik::to_string(query)},
                      {"mode", typik::to_string(mode)},
                      {"answer", typik::to_string(answer)},
                      {"witnesses", w},
                      {"stats", {{"nodes", stats.nodes}, {"conflicts", stats.conflicts}}}};
  if (answer == Answer::NotEntailed) j["falsifying_atoms"] = atoms;
  if (!message.empty()) j["message"] = message;
  return j;
}

Reasoner::Context::Context(ProgramFacts f)
    : facts(std::make_shared<const ProgramFacts>(std::move(f))), engine(*facts) {}

Reasoner::Reasoner(const KnowledgeBase& kb, ReasonerOptions options)
    : nkb_(normalize(kb)), options_(options) {}

Reasoner::Context& Reasoner::context(const std::optional<Query>& q) {
  ProgramFacts f = translate(nkb_, q);
  auto& slot = contexts_[f.tc_concept];
  if (!slot) slot = std::make_unique<Context>(std::move(f));
  return *slot;
}

Verdict Reasoner::entails(const Query& q, Mode mode) {
  Context& ctx = context(q);
  auto start = std::chrono::steady_clock::now();
  ctx.engine.set_budget(std::make_shared<Budget>(options_.limits));
  SearchStats before = ctx.engine.stats();
  Verdict v = decide(ctx, q, mode);
  const SearchStats& after = ctx.engine.stats();
  v.stats = {after.nodes - before.nodes, after.conflicts - before.conflicts,
             after.solutions - before.solutions};
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict Reasoner::decide(Context& ctx, const Query& q, Mode mode) {
  Verdict v;
  v.query = q;
  v.mode = mode;
  v.facts = ctx.facts;
  const ProgramFacts& f = *ctx.facts;
  Engine& engine = ctx.engine;
  if (!ctx.consistent) ctx.consistent = engine.find({}).has_value();
  if (!*ctx.consistent) {
    v.answer = Answer::NoModel;
    v.message = "inconsistent KB";
    return v;
  }

  SearchSpec spec;
  std::vector<FrontEntry>* front = nullptr;
  if (mode != Mode::Rational) {
    if (!ctx.satisfiable) ctx.satisfiable = satisfiable_concepts(engine);
    const auto& sat = *ctx.satisfiable;
    if (!ctx.t_front && ctx.t_front_error.empty()) {
      try {
        ctx.t_front = t_minimal_front(engine, sat);
      } catch (const NoTCompleteModel& e) {
        ctx.t_front_error = e.what();
      }
    }
    if (!ctx.t_front) {
      v.answer = Answer::NoTCompleteModel;
      v.message = ctx.t_front_error;
      return v;
    }
    spec = t_complete_spec(f, sat);
    spec.constraints.push_back(member_of(preference_constants(f, sat), vectors_of(*ctx.t_front)));
    front = &*ctx.t_front;
    if (mode == Mode::TMinABox) {
      if (!ctx.abox_front) ctx.abox_front = abox_minimal_front(engine, sat, *ctx.t_front);
      spec.constraints.push_back(member_of(named_constants(f), vectors_of(*ctx.abox_front)));
      front = &*ctx.abox_front;
    }
  }
  spec.forbid = query_target(q, f);

  if (auto s = engine.find(spec)) {
    v.answer = Answer::NotEntailed;
    v.witnesses.push_back(RankProfile::of(*s));
    v.falsifying_atoms = s->named_atoms();
  } else {
    v.answer = Answer::Entailed;
  }
  if (front) {
    for (const auto& e : *front) {
      if (v.witnesses.size() >= options_.witness_limit) break;
      auto p = RankProfile::of(e.representative);
      if (std::find(v.witnesses.begin(), v.witnesses.end(), p) == v.witnesses.end()) {
        v.witnesses.push_back(std::move(p));
      }
    }
  }
  return v;
}

Verdict entails(const KnowledgeBase& kb, const Query& q, Mode mode, ReasonerOptions options) {
  return Reasoner(kb, options).entails(q, mode);
}

std::string emit_program(const KnowledgeBase& kb, const std::optional<Query>& query, Mode mode,
                         Limits limits) {
  NormalizedKB nkb = normalize(kb);
  EmitOptions options;
  options.mode = mode;
  if (mode != Mode::Rational) {
    Engine engine(translate(nkb, query), std::make_shared<Budget>(limits));
    options.satisfiable = satisfiable_concepts(engine);
  }
  return emit_asp(nkb, query, options);
}

}  // namespace typik
