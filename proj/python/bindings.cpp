#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "typik/bench.hpp"
#include "typik/bundled.hpp"
#include "typik/engine.hpp"
#include "typik/error.hpp"
#include "typik/minimal.hpp"
#include "typik/normalizer.hpp"
#include "typik/parser.hpp"
#include "typik/pdlp.hpp"

namespace py = pybind11;
using namespace typik;

namespace {

Mode mode_of(const std::string& s) {
  auto m = parse_mode(s);
  if (!m) throw py::value_error("unknown mode '" + s + "'");
  return *m;
}

Limits limits_of(std::optional<double> budget) { return {budget.value_or(0), 0}; }

nlohmann::json front_json(const std::vector<FrontEntry>& front, const ProgramFacts& f) {
  auto out = nlohmann::json::array();
  for (const auto& e : front) {
    auto j = RankProfile::of(e.representative).to_json(f);
    j["vector"] = e.vector;
    if (e.count) j["count"] = *e.count;
    out.push_back(j);
  }
  return out;
}

class PyReasoner {
 public:
  PyReasoner(const std::string& text, std::optional<double> budget)
      : reasoner_(parse_kb(text), ReasonerOptions{limits_of(budget), 3}) {}

  std::string entails(const std::string& query, const std::string& mode) {
    auto q = parse_query(query, reasoner_.normalized().base);
    return reasoner_.entails(q, mode_of(mode)).to_json().dump();
  }

  // T-minimal and ABox-minimal fronts of the KB without a query.
  std::string fronts() {
    auto& ctx = reasoner_.context(std::nullopt);
    const auto& f = ctx.engine.facts();
    auto sat = satisfiable_concepts(ctx.engine);
    auto t_front = t_minimal_front(ctx.engine, sat);
    auto abox = abox_minimal_front(ctx.engine, sat, t_front);
    nlohmann::json j{{"tbox", front_json(t_front, f)}, {"abox", front_json(abox, f)}};
    return j.dump();
  }

  std::string normalized() const { return print_kb(reasoner_.normalized().kb); }

 private:
  Reasoner reasoner_;
};

std::string models(const std::string& text, size_t limit) {
  auto nkb = normalize(parse_kb(text));
  auto facts = translate(nkb);
  auto out = nlohmann::json::array();
  for (const auto& s : enumerate_answer_sets(facts, {}, limit)) out.push_back(RankProfile::of(s).to_json(facts));
  return out.dump();
}

std::string pdlp_check(const std::string& program, std::optional<double> budget) {
  auto p = parse_pdlp(program);
  auto out = nlohmann::json::array();
  for (const auto& c : cross_check(p, {limits_of(budget), 3})) {
    out.push_back({{"literal", p.to_string(c.literal)},
                   {"bruteforce", c.bruteforce},
                   {"reasoner", to_string(c.reasoner)},
                   {"agree", c.agree}});
  }
  return out.dump();
}

std::string bench(const std::string& text, const std::vector<int>& multipliers, double budget) {
  auto doc = parse_document(text);
  return run_bench(doc.kb, doc.queries, {BenchDimension::ABox, BenchDimension::KB}, multipliers, {budget, 0})
      .to_json()
      .dump();
}

}  // namespace

PYBIND11_MODULE(_typik, m) {
  m.doc() = "Typicality reasoning in SROEL(⊓,×) by native answer set computation";

  auto base = py::register_exception<Error>(m, "TypikError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NoModel>(m, "NoModel", base.ptr());
  py::register_exception<NoTCompleteModel>(m, "NoTCompleteModel", base.ptr());
  py::register_exception<InvalidPdlp>(m, "InvalidPdlp", base.ptr());

  py::class_<PyReasoner>(m, "Reasoner")
      .def(py::init<const std::string&, std::optional<double>>(), py::arg("kb"), py::arg("budget") = py::none())
      .def("entails", &PyReasoner::entails, py::arg("query"), py::arg("mode") = "tmin")
      .def("fronts", &PyReasoner::fronts)
      .def("normalized", &PyReasoner::normalized);

  m.def("normalize", [](const std::string& text) { return print_kb(normalize(parse_kb(text)).kb); }, py::arg("kb"));
  m.def(
      "emit_asp",
      [](const std::string& text, const std::string& mode, std::optional<std::string> query) {
        auto kb = parse_kb(text);
        std::optional<Query> q;
        if (query) q = parse_query(*query, kb);
        return emit_program(kb, q, mode_of(mode));
      },
      py::arg("kb"), py::arg("mode") = "tmin", py::arg("query") = py::none());
  m.def("models", &models, py::arg("kb"), py::arg("limit") = 3);
  m.def("pdlp_check", &pdlp_check, py::arg("program"), py::arg("budget") = py::none());
  m.def("bench", &bench, py::arg("kb"), py::arg("multipliers"), py::arg("budget") = 60.0);
  m.def("bundled_fixture", [](const std::string& name) { return bundled_fixture(name); }, py::arg("name"));
  m.def("bundled_fixture_names", &bundled_fixture_names);
}
