#include <doctest.h>

#include "helpers.hpp"
#include "random_kb.hpp"
#include "small_model.hpp"
#include "typik/engine.hpp"
#include "typik/model.hpp"
#include "typik/normalizer.hpp"

using namespace typik;
using namespace typik::testing;

namespace {

RankedModel three_elements() {
  RankedModel m;
  m.domain = {{"x", 0}, {"y", 1}, {"z", 2}};
  m.rank = {1, 0, 0};
  m.concept_ext[ConceptName("A")] = {0, 1};
  m.concept_ext[ConceptName("B")] = {1};
  m.role_ext[RoleName("R")] = {{0, 2}, {2, 2}};
  m.individual_of[IndividualName("a")] = 0;
  m.individual_of[IndividualName("b")] = 1;
  return m;
}

KnowledgeBase parse(const std::string& body) {
  return parse_kb("class A, B.\nrole R.\nindividual a, b.\n" + body);
}

}  // namespace

TEST_CASE("typicality picks the lowest-ranked instances") {
  auto m = three_elements();
  auto a = Concept::atom(ConceptName("A"));
  CHECK(evaluate(m, Concept::typ(a)) == std::set<int>{1});
  CHECK(evaluate(m, Concept::typ(Concept::top())) == std::set<int>{1, 2});
  CHECK(evaluate(m, Concept::typ(Concept::bot())).empty());
  CHECK(evaluate(m, Concept::exists(RoleName("R"), Concept::top())) == std::set<int>{0, 2});
  CHECK(evaluate(m, Concept::self(RoleName("R"))) == std::set<int>{2});
  CHECK(evaluate(m, Concept::nominal(IndividualName("b"))) == std::set<int>{1});
  CHECK(evaluate(m, Concept::atom(ConceptName("Unknown"))).empty());
}

TEST_CASE("check_model reports exactly the violated axioms") {
  auto m = three_elements();
  CHECK(check_model(m, parse("tbox:\n  T(A) [= B.\n  B [= A.\n")).empty());
  auto v = check_model(m, parse("tbox:\n  A [= B.\n  T(A) [= B.\nabox:\n  B(a).\n  R(a, b).\n"));
  REQUIRE(v.size() == 3);
  CHECK(v[0].axiom_index == 0);
  CHECK(v[1].axiom_index == 2);
  CHECK(v[2].axiom_index == 3);
  CHECK(check_model(m, parse("rbox:\n  R o R [= R.\n")).empty());
  CHECK(check_model(m, parse("rbox:\n  A x Top [= R.\n")).size() == 1);
  CHECK(satisfies(m, Query::typ(IndividualName("b"), ConceptName("A"))));
  CHECK_FALSE(satisfies(m, Query::typ(IndividualName("a"), ConceptName("A"))));
}

TEST_CASE("extracted models satisfy the normalized KB") {
  std::mt19937_64 rng(3);
  size_t checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto kb = random_normal_kb(rng);
    auto facts = translate(as_normalized(kb));
    Engine e(facts);
    e.enumerate({}, [&](const AnswerSet& s) {
      auto m = extract_model(s);
      auto v = check_model(m, kb);
      INFO(print_kb(kb));
      CHECK(v.empty());
      for (int c = 0; c < facts.n_named; ++c) {
        auto it = m.individual_of.find(facts.individuals[c]);
        REQUIRE(it != m.individual_of.end());
        CHECK(m.rank[it->second] == s.rank(c));
      }
      ++checked;
      return checked % 40 != 0;
    });
  }
  CHECK(checked > 100);
}

TEST_CASE("example models") {
  auto kb = fixture("ex1").kb;
  auto nkb = normalize(kb);
  Engine e(translate(nkb));
  auto s = e.find();
  REQUIRE(s.has_value());
  auto m = extract_model(*s);
  CHECK(check_model(m, nkb.kb).empty());
  CHECK(satisfies(m, Query::typ(IndividualName("mario"), ConceptName("Student"))));
}

TEST_CASE("small models exist exactly when answer sets do") {
  std::mt19937_64 rng(21);
  RandomKbShape shape;
  shape.max_individuals = 2;
  shape.max_typ = 1;
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    auto kb = random_normal_kb(rng, shape);
    auto facts = translate(as_normalized(kb));
    bool engine = Engine(facts).find().has_value();
    auto small = find_small_model(kb, facts.constant_count(), facts.upper_bound);
    INFO(print_kb(kb));
    CHECK(engine == small.has_value());
    if (small) CHECK(check_model(*small, kb).empty());
    unsat += !engine;
  }
  CHECK(unsat > 0);
}

TEST_CASE("small model search handles plain contradictions") {
  auto kb = parse("tbox:\n  A [= B.\n  B [= Bot.\nabox:\n  A(a).\n");
  CHECK_FALSE(find_small_model(kb, 3, 1).has_value());
  auto typ = parse("tbox:\n  T(A) [= Bot.\nabox:\n  A(a).\n");
  CHECK_FALSE(find_small_model(typ, 3, 1).has_value());
  auto ok = parse("tbox:\n  T(A) [= B.\n  A & B [= Bot.\nabox:\n  A(a).\n");
  auto m = find_small_model(ok, 3, 1);
  CHECK_FALSE(m.has_value());
  auto ranked = parse("tbox:\n  T(Top) [= B.\n  A & B [= Bot.\nabox:\n  A(a).\n");
  auto r = find_small_model(ranked, 3, 1);
  REQUIRE(r.has_value());
  CHECK(check_model(*r, ranked).empty());
  CHECK(r->rank[r->individual_of.at(IndividualName("a"))] == 1);
}

TEST_CASE("loops of transitive roles survive on duplicated witnesses") {
  auto kb = parse("tbox:\n  A [= Ex R.A.\nrbox:\n  R o R [= R.\nabox:\n  A(a).\n");
  auto facts = translate(as_normalized(kb));
  Engine e(facts);
  int checked = 0;
  e.enumerate({}, [&](const AnswerSet& s) {
    auto m = extract_model(s);
    CHECK(check_model(m, kb).empty());
    CHECK(m.role_ext[RoleName("R")].count({2, 2}) == 1);
    ++checked;
    return true;
  });
  CHECK(checked > 0);
}
