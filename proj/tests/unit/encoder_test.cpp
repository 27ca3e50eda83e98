#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "typik/normalizer.hpp"
#include "typik/program.hpp"

using namespace typik;
using namespace typik::testing;

namespace {

ProgramFacts facts_of(const std::string& name, const std::optional<Query>& q = std::nullopt) {
  return translate(normalize(fixture(name).kb), q);
}

}  // namespace

TEST_CASE("constants are named, then existential witnesses, then typicality witnesses") {
  auto f = facts_of("ex1");
  CHECK(f.n_named == 7);
  CHECK(f.n_tc == 6);
  CHECK(f.upper_bound == 6);
  CHECK(f.constant_count() == static_cast<int>(f.constants.size()));
  for (int i = 0; i < f.constant_count(); ++i) {
    auto kind = i < f.first_supex() ? Constant::Kind::Named
                : i < f.first_tc()  ? Constant::Kind::AuxSupex
                                    : Constant::Kind::AuxTc;
    CHECK(f.constants[i].kind == kind);
  }
  CHECK(f.constants[f.tc_constant(0)].symbol == "auxtc_0");
  CHECK(f.concepts[0] == ConceptName("Top"));
  CHECK(f.concepts[1] == ConceptName("Bot"));
}

TEST_CASE("a new typicality query concept raises the rank bound") {
  auto q = Query::typ(IndividualName("mary"), ConceptName("Young"));
  auto f = facts_of("ex1", q);
  CHECK(f.upper_bound == 7);
  CHECK(f.n_tc == 7);
  auto t = query_target(q, f);
  CHECK(t.typ);
  CHECK(t.constant == *f.individual_id(IndividualName("mary")));
  CHECK(to_string(query_atom(q, f)) == "typ(mary,young)");
  CHECK(to_string(query_atom(Query::inst(IndividualName("mario"), ConceptName("MathHater")), f)) ==
        "inst(mario,mathHater)");
}

TEST_CASE("fact listing matches the typed facts") {
  auto f = facts_of("ex2");
  std::multiset<std::string> names;
  for (const auto& a : f.atoms) names.insert(std::string(predicate_name(a.pred)));
  CHECK(names.count("subProd") == f.sub_prod.size());
  CHECK(names.count("subConj") == f.sub_conj.size());
  CHECK(names.count("auxtc") == static_cast<size_t>(f.n_tc));
  CHECK(names.count("upperbound") == 1);
  for (const auto& a : f.atoms) CHECK(static_cast<int>(a.args.size()) == arity(a.pred));
}

TEST_CASE("untranslatable axioms are rejected") {
  auto kb = fixture("ex1").kb;
  NormalizedKB raw{kb, {}, kb};
  CHECK_THROWS_AS(translate(raw), NotNormalized);
}

TEST_CASE("emitted programs use only the atom vocabulary") {
  std::set<std::string> vocabulary;
  for (Pred p : all_predicates()) vocabulary.insert(std::string(predicate_name(p)));
  std::regex call("(-?)([a-z_][A-Za-z0-9_]*)\\(");
  for (const auto& name : {"ex1", "ex2", "ex3", "bob"}) {
    for (Mode mode : {Mode::Rational, Mode::TMin, Mode::TMinABox}) {
      auto text = emit_asp(normalize(fixture(name).kb), std::nullopt, {mode, {}});
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%' || line[0] == '#') continue;
        for (std::sregex_iterator it(line.begin(), line.end(), call), end; it != end; ++it) {
          INFO(line);
          CHECK(vocabulary.count((*it)[2]) == 1);
        }
      }
    }
  }
}

TEST_CASE("emitted programs are deterministic and carry the preference directives") {
  auto nkb = normalize(fixture("ex1").kb);
  for (Mode mode : {Mode::Rational, Mode::TMin, Mode::TMinABox}) {
    auto a = emit_asp(nkb, std::nullopt, {mode, {0, 1}});
    auto b = emit_asp(normalize(fixture("ex1").kb), std::nullopt, {mode, {1, 0}});
    CHECK(a == b);
    bool pref = a.find("#preference(p-tbox, pareto)") != std::string::npos;
    CHECK(pref == (mode != Mode::Rational));
    CHECK((a.find("#optimize") != std::string::npos) == (mode != Mode::Rational));
    CHECK((a.find("p-abox") != std::string::npos) == (mode == Mode::TMinABox));
    CHECK((a.find("p-lex") != std::string::npos) == (mode == Mode::TMinABox));
  }
  auto text = emit_asp(nkb, std::nullopt, {Mode::TMin, {}});
  for (int k = 0; k < 6; ++k) {
    std::string p = "p_" + std::to_string(k + 1);
    CHECK(text.find("#preference(" + p + ", less(weight)){ X,X :: rank(auxtc_" + std::to_string(k) +
                    ",X) : possrank(X) }.") != std::string::npos);
  }
}

TEST_CASE("mode names round-trip") {
  for (Mode m : {Mode::Rational, Mode::TMin, Mode::TMinABox}) CHECK(parse_mode(to_string(m)) == m);
  CHECK(parse_mode("tmin_abox") == Mode::TMinABox);
  CHECK_FALSE(parse_mode("classical").has_value());
}
