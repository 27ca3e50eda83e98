#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "random_kb.hpp"
#include "typik/error.hpp"
#include "typik/minimal.hpp"
#include "typik/normalizer.hpp"

using namespace typik;
using namespace typik::testing;

namespace {

using Vec = std::vector<int>;

bool weakly_below(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::map<Vec, uint64_t> pareto_min(const std::vector<Vec>& vs) {
  std::map<Vec, uint64_t> out;
  for (const auto& v : vs) {
    bool dominated = std::any_of(vs.begin(), vs.end(), [&](const Vec& w) { return w != v && weakly_below(w, v); });
    if (!dominated) ++out[v];
  }
  return out;
}

// Fronts and verdicts recomputed from a full enumeration.
struct Brute {
  std::vector<AnswerSet> all;
  std::vector<int> satisfiable;
  std::vector<AnswerSet> complete;
  std::map<Vec, uint64_t> t_front;
  std::vector<AnswerSet> t_minimal;
  std::map<Vec, uint64_t> abox_front;
  std::vector<AnswerSet> abox_minimal;

  explicit Brute(Engine& e) {
    e.enumerate({}, [&](const AnswerSet& s) {
      all.push_back(s);
      return true;
    });
    const auto& f = e.facts();
    for (int k = 0; k < f.n_tc; ++k) {
      if (std::any_of(all.begin(), all.end(), [&](const AnswerSet& s) { return s.aux_instance(k); })) {
        satisfiable.push_back(k);
      }
    }
    for (const auto& s : all) {
      if (std::all_of(satisfiable.begin(), satisfiable.end(), [&](int k) { return s.aux_instance(k); })) {
        complete.push_back(s);
      }
    }
    std::vector<Vec> tv;
    for (const auto& s : complete) tv.push_back(tvec(s));
    t_front = pareto_min(tv);
    std::vector<Vec> av;
    for (const auto& s : complete) {
      if (t_front.count(tvec(s))) {
        t_minimal.push_back(s);
        av.push_back(avec(s, f));
      }
    }
    abox_front = pareto_min(av);
    for (const auto& s : t_minimal) {
      if (abox_front.count(avec(s, f))) abox_minimal.push_back(s);
    }
  }

  Vec tvec(const AnswerSet& s) const {
    Vec v;
    for (int k : satisfiable) v.push_back(s.rank(s.facts().tc_constant(k)));
    return v;
  }
  static Vec avec(const AnswerSet& s, const ProgramFacts& f) {
    Vec v;
    for (int c = 0; c < f.n_named; ++c) v.push_back(s.rank(c));
    return v;
  }

  Answer verdict(const QueryTarget& t, Mode mode) const {
    if (all.empty()) return Answer::NoModel;
    const std::vector<AnswerSet>* pool = &all;
    if (mode != Mode::Rational) {
      if (complete.empty()) return Answer::NoTCompleteModel;
      pool = mode == Mode::TMin ? &t_minimal : &abox_minimal;
    }
    bool all_hold = std::all_of(pool->begin(), pool->end(), [&](const AnswerSet& s) { return s.holds(t); });
    return all_hold ? Answer::Entailed : Answer::NotEntailed;
  }
};

std::map<Vec, uint64_t> as_map(const std::vector<FrontEntry>& front) {
  std::map<Vec, uint64_t> out;
  for (const auto& e : front) out[e.vector] = e.count.value_or(0);
  return out;
}

Answer verdict(Reasoner& r, const std::string& query, Mode mode) {
  return r.entails(parse_query(query, r.normalized().base), mode).answer;
}

}  // namespace

TEST_CASE("students, Italians and nerds") {
  Reasoner r(fixture("ex1").kb);
  CHECK(verdict(r, "T(Student)(mario)", Mode::Rational) == Answer::Entailed);
  CHECK(verdict(r, "Young(mario)", Mode::Rational) == Answer::Entailed);
  CHECK(verdict(r, "MathHater(paul)", Mode::Rational) == Answer::Entailed);
  CHECK(verdict(r, "MathLover(bob)", Mode::Rational) == Answer::NotEntailed);
  CHECK(verdict(r, "MathHater(paul)", Mode::TMin) == Answer::Entailed);
  CHECK(verdict(r, "MathLover(bob)", Mode::TMin) == Answer::Entailed);
  CHECK(verdict(r, "MathHater(mary)", Mode::TMin) == Answer::NotEntailed);
  CHECK(verdict(r, "MathHater(mary)", Mode::TMinABox) == Answer::Entailed);
  CHECK(verdict(r, "MathHater(mario)", Mode::TMin) == Answer::Entailed);

  auto v = r.entails(parse_query("MathHater(mary)", r.normalized().base), Mode::TMin);
  REQUIRE_FALSE(v.witnesses.empty());
  int mary = *v.facts->individual_id(IndividualName("mary"));
  CHECK(v.witnesses.front().individual_ranks[mary] > 0);
  auto json = v.to_json();
  CHECK(json["answer"] == "not entailed");
  CHECK(json["mode"] == "tmin");
}

TEST_CASE("luigi has black hair in every T-minimal model") {
  Reasoner r(fixture("ex1").kb);
  auto black = Concept::exists(RoleName("hasHair"), Concept::nominal(IndividualName("Black")));
  auto names = r.normalized().names_for(black);
  REQUIRE(names.size() == 1);
  auto q = Query::inst(IndividualName("luigi"), names[0]);
  CHECK(r.entails(q, Mode::TMin).answer == Answer::Entailed);
  CHECK(r.entails(q, Mode::Rational).answer == Answer::NotEntailed);
}

TEST_CASE("two concepts share the lowest rank in no model") {
  Reasoner r(fixture("ex2").kb);
  auto& ctx = r.context(std::nullopt);
  auto sat = satisfiable_concepts(ctx.engine);
  CHECK(sat.size() == 3);
  auto front = t_minimal_front(ctx.engine, sat);
  std::set<Vec> vectors;
  for (const auto& e : front) vectors.insert(e.vector);
  CHECK(vectors == std::set<Vec>{{0, 0, 1}, {0, 1, 0}});
  for (const auto& e : front) CHECK(t_complete(e.representative, sat));
}

TEST_CASE("course teachers are minimized per individual") {
  Reasoner r(fixture("ex3").kb);
  auto& ctx = r.context(std::nullopt);
  auto sat = satisfiable_concepts(ctx.engine);
  auto t_front = t_minimal_front(ctx.engine, sat);
  auto abox = abox_minimal_front(ctx.engine, sat, t_front);
  const auto& f = ctx.engine.facts();
  int c1 = *f.individual_id(IndividualName("c1"));
  int c2 = *f.individual_id(IndividualName("c2"));
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : abox) pairs.insert({e.vector[c1], e.vector[c2]});
  CHECK(pairs == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("no T-complete model when each typical instance forces the other") {
  Reasoner r(fixture("bob").kb);
  CHECK(verdict(r, "E(bob)", Mode::TMin) == Answer::NoTCompleteModel);
  CHECK(verdict(r, "E(bob)", Mode::TMinABox) == Answer::NoTCompleteModel);
  CHECK(verdict(r, "E(bob)", Mode::Rational) == Answer::NotEntailed);
  auto& ctx = r.context(std::nullopt);
  auto sat = satisfiable_concepts(ctx.engine);
  CHECK_THROWS_AS(t_minimal_front(ctx.engine, sat), NoTCompleteModel);
}

TEST_CASE("inconsistent KBs have no model") {
  auto kb = parse_kb("class A.\nindividual a.\ntbox:\n  A [= Bot.\nabox:\n  A(a).\n");
  for (Mode m : {Mode::Rational, Mode::TMin, Mode::TMinABox}) {
    CHECK(entails(kb, Query::inst(IndividualName("a"), ConceptName("A")), m).answer == Answer::NoModel);
  }
}

TEST_CASE("fronts match a brute-force Pareto filter") {
  std::mt19937_64 rng(31);
  int nonempty = 0;
  for (int i = 0; i < 150; ++i) {
    auto kb = random_normal_kb(rng);
    INFO(print_kb(kb));
    Engine e(translate(as_normalized(kb)));
    Brute b(e);
    auto sat = satisfiable_concepts(e);
    CHECK(sat == b.satisfiable);
    if (b.all.empty()) {
      CHECK_THROWS_AS(t_minimal_front(e, sat), NoModel);
      continue;
    }
    if (b.complete.empty()) {
      CHECK_THROWS_AS(t_minimal_front(e, sat), NoTCompleteModel);
      continue;
    }
    auto t_front = t_minimal_front(e, sat, true);
    CHECK(as_map(t_front) == b.t_front);
    auto abox = abox_minimal_front(e, sat, t_front, true);
    CHECK(as_map(abox).size() == b.abox_front.size());
    for (const auto& [v, n] : as_map(abox)) CHECK(b.abox_front.count(v));
    ++nonempty;
  }
  CHECK(nonempty > 50);
}

TEST_CASE("verdicts match brute force in every mode") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 150; ++i) {
    auto kb = random_normal_kb(rng);
    auto q = random_query(rng, kb);
    INFO(print_kb(kb) << "\nquery " << to_string(q));
    Engine e(translate(as_normalized(kb), q));
    Brute b(e);
    auto t = query_target(q, e.facts());
    Reasoner r(kb);
    for (Mode m : {Mode::Rational, Mode::TMin, Mode::TMinABox}) {
      auto v = r.entails(q, m);
      CHECK(v.answer == b.verdict(t, m));
    }
  }
}

TEST_CASE("preference vectors cover the satisfiable concepts only") {
  auto f = translate(normalize(fixture("ex1").kb));
  auto pc = preference_constants(f, {0, 2});
  CHECK(pc == std::vector<int>{f.tc_constant(0), f.tc_constant(2)});
  auto spec = t_complete_spec(f, {0, 2});
  REQUIRE(spec.flag_domain.size() == static_cast<size_t>(f.n_tc));
  CHECK(spec.flag_domain[0] == 1);
  CHECK(spec.flag_domain[1] == 2);
  CHECK(spec.flag_domain[2] == 1);
}
