#include <doctest.h>

#include "helpers.hpp"
#include "typik/bench.hpp"
#include "typik/validate.hpp"

using namespace typik;
using namespace typik::testing;

TEST_CASE("primed names") {
  CHECK(primed("mary", 0) == "mary");
  CHECK(primed("mary", 2) == "mary''");
}

TEST_CASE("ABox replication copies assertions over primed individuals") {
  auto kb = fixture("ex1").kb;
  auto r = replicate_abox(kb, 3);
  CHECK(r.tbox == kb.tbox);
  CHECK(r.abox.size() == 3 * kb.abox.size());
  CHECK(r.signature.individuals().size() == 17);
  CHECK_FALSE(r.signature.contains(IndividualName("Black'")));
  CHECK(r.signature.contains(IndividualName("mario''")));
  CHECK(r.signature.concepts() == kb.signature.concepts());
  CHECK(validate(r).ok());
  CHECK(replicate_abox(kb, 1) == kb);
}

TEST_CASE("KB replication copies the whole signature") {
  auto kb = fixture("ex2").kb;
  auto r = replicate_kb(kb, 2);
  CHECK(r.tbox.size() == 2 * kb.tbox.size());
  CHECK(r.rbox.size() == 2 * kb.rbox.size());
  CHECK(r.signature.concepts().size() == 2 * kb.signature.concepts().size());
  CHECK(r.signature.contains(ConceptName("C'")));
  CHECK(r.signature.contains(RoleName("R'")));
  CHECK(validate(r).ok());
  CHECK(typicality_signature(r).upper_bound() == 2 * typicality_signature(kb).upper_bound() - 1);
}

TEST_CASE("bench tables have one row per dimension and one cell per multiplier") {
  auto doc = fixture("ex1");
  auto t = run_bench(doc.kb, doc.queries, {BenchDimension::ABox, BenchDimension::KB}, {1, 2}, {10, 0});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.multipliers == std::vector<int>{1, 2});
  for (const auto& row : t.rows) {
    REQUIRE(row.cells.size() == 2);
    CHECK(row.cells[0].seconds.has_value());
    CHECK(row.cells[0].queries == doc.queries.size());
  }
  CHECK(t.rows[0].cells[0].entailed == 5);
  auto text = t.to_text();
  CHECK(text.find(row_label(BenchDimension::ABox)) != std::string::npos);
  CHECK(text.find(row_label(BenchDimension::KB)) != std::string::npos);
  auto json = t.to_json();
  CHECK(json["rows"].size() == 2);
}
