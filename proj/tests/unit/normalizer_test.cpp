#include <doctest.h>

#include "helpers.hpp"
#include "random_kb.hpp"
#include "typik/normalizer.hpp"
#include "typik/validate.hpp"

using namespace typik;
using namespace typik::testing;

TEST_CASE("normalization produces normal-form axioms only") {
  for (const auto& name : {"ex1", "ex2", "ex3", "bob"}) {
    auto nkb = normalize(fixture(name).kb);
    for (const auto& a : nkb.kb.axioms()) {
      INFO(name << ": " << to_string(a));
      CHECK(is_normal(a));
    }
  }
}

TEST_CASE("fresh names record the concept they stand for") {
  auto kb = fixture("ex1").kb;
  auto nkb = normalize(kb);
  auto black = Concept::exists(RoleName("hasHair"), Concept::nominal(IndividualName("Black")));
  auto names = nkb.names_for(black);
  REQUIRE(names.size() == 1);
  CHECK(nkb.is_fresh(names[0]));
  CHECK(nkb.origin(names[0]) == black);
  CHECK_FALSE(nkb.is_fresh(ConceptName("Student")));
  CHECK(nkb.base == kb);
  for (const auto& [name, origin] : nkb.fresh_names) {
    CHECK_FALSE(kb.signature.contains_spelling(name.str()));
  }
}

TEST_CASE("normalization keeps the typicality signature") {
  for (const auto& name : {"ex1", "ex2", "ex3", "bob"}) {
    auto kb = fixture(name).kb;
    auto nkb = normalize(kb);
    CHECK(typicality_signature(nkb.kb).upper_bound() == typicality_signature(kb).upper_bound());
  }
}

TEST_CASE("normalization leaves normal KBs unchanged") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto kb = random_normal_kb(rng);
    for (const auto& a : kb.axioms()) REQUIRE(is_normal(a));
    auto nkb = normalize(kb);
    CHECK(nkb.fresh_names.empty());
    CHECK(nkb.kb.axioms() == kb.axioms());
  }
}

TEST_CASE("is_normal rejects nested shapes") {
  auto a = Concept::atom(ConceptName("A"));
  auto b = Concept::atom(ConceptName("B"));
  auto c = Concept::atom(ConceptName("C"));
  CHECK(is_normal(Axiom(ConceptInclusion{a, b})));
  CHECK(is_normal(Axiom(ConceptInclusion{Concept::conj(a, b), c})));
  CHECK_FALSE(is_normal(Axiom(ConceptInclusion{Concept::conj(Concept::conj(a, b), c), a})));
  CHECK_FALSE(is_normal(Axiom(ConceptInclusion{a, Concept::conj(b, c)})));
  CHECK(is_normal(Axiom(ConceptInclusion{Concept::typ(a), b})));
  CHECK_FALSE(is_normal(Axiom(ConceptInclusion{Concept::typ(Concept::conj(a, b)), c})));
}
