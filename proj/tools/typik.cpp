#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "typik/bench.hpp"
#include "typik/bundled.hpp"
#include "typik/engine.hpp"
#include "typik/error.hpp"
#include "typik/minimal.hpp"
#include "typik/normalizer.hpp"
#include "typik/parser.hpp"
#include "typik/pdlp.hpp"
#include "typik/program.hpp"

using namespace typik;
using nlohmann::json;

namespace {

enum Exit { kEntailed = 0, kNotEntailed = 1, kNoModel = 2, kUsage = 3 };

struct RunConfig {
  std::string input;
  std::string query;
  std::string mode = "tmin";
  double budget = 60;
  size_t limit = 3;
  uint64_t seed = 1;
  std::string format = "text";
};

bool json_output(const RunConfig& c) { return c.format == "json"; }

Limits limits_of(const RunConfig& c) { return Limits{c.budget, 0}; }

Mode mode_of(const RunConfig& c) {
  auto m = parse_mode(c.mode);
  if (!m) throw CLI::ValidationError("--mode", "unknown mode " + c.mode);
  return *m;
}

std::vector<Query> queries_of(const RunConfig& c, const Document& doc) {
  if (!c.query.empty()) return {parse_query(c.query, doc.kb)};
  return doc.queries;
}

std::string profile_text(const RankProfile& p, const ProgramFacts& f) {
  std::string out;
  for (size_t t = 0; t < p.concept_ranks.size(); ++t) {
    const auto& r = p.concept_ranks[t];
    out += (t ? " " : "") + f.constant_notes[f.tc_constant(static_cast<int>(t))] + "=" +
           (r.instance ? std::to_string(r.rank) : "-");
  }
  out += p.concept_ranks.empty() ? "|" : " |";
  for (size_t x = 0; x < p.individual_ranks.size(); ++x) {
    out += " " + f.individuals[x].str() + "=" + std::to_string(p.individual_ranks[x]);
  }
  return out;
}

int exit_code(Answer a) {
  switch (a) {
    case Answer::Entailed:
      return kEntailed;
    case Answer::NotEntailed:
      return kNotEntailed;
    default:
      return kNoModel;
  }
}

void print_verdict(const Verdict& v) {
  std::cout << "query: " << to_string(v.query) << "\n";
  std::cout << "mode: " << to_string(v.mode) << "\n";
  std::cout << "answer: " << to_string(v.answer) << "\n";
  if (!v.message.empty()) std::cout << "message: " << v.message << "\n";
  for (size_t i = 0; i < v.witnesses.size(); ++i) {
    bool falsifying = i == 0 && v.answer == Answer::NotEntailed;
    std::cout << "witness " << i + 1 << (falsifying ? " (falsifying)" : "") << ": "
              << profile_text(v.witnesses[i], *v.facts) << "\n";
  }
  if (v.answer == Answer::NotEntailed) {
    std::cout << "falsifying atoms:";
    for (const auto& a : v.falsifying_atoms) std::cout << " " << to_string(a);
    std::cout << "\n";
  }
}

int cmd_check(const RunConfig& c) {
  Document doc = read_document_file(c.input);
  auto queries = queries_of(c, doc);
  if (queries.empty()) throw CLI::ValidationError("--query", "no query given and none in the file");
  Mode mode = mode_of(c);
  Reasoner reasoner(doc.kb, ReasonerOptions{limits_of(c), c.limit});
  int code = kEntailed;
  json all = json::array();
  for (size_t i = 0; i < queries.size(); ++i) {
    Verdict v = reasoner.entails(queries[i], mode);
    code = std::max(code, exit_code(v.answer));
    if (json_output(c)) {
      all.push_back(v.to_json());
    } else {
      if (i) std::cout << "\n";
      print_verdict(v);
    }
  }
  if (json_output(c)) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return code;
}

int cmd_models(const RunConfig& c) {
  Document doc = read_document_file(c.input);
  std::optional<Query> q;
  if (!c.query.empty()) q = parse_query(c.query, doc.kb);
  ProgramFacts facts = translate(normalize(doc.kb), q);
  Engine engine(facts, std::make_shared<Budget>(limits_of(c)));
  json all = json::array();
  size_t n = 0;
  engine.enumerate({}, [&](const AnswerSet& s) {
    ++n;
    RankProfile p = RankProfile::of(s);
    std::vector<std::string> atoms;
    for (const auto& a : s.named_atoms()) atoms.push_back(to_string(a));
    if (json_output(c)) {
      json j = p.to_json(facts);
      j["atoms"] = atoms;
      if (q) j["query_holds"] = s.holds(query_target(*q, facts));
      all.push_back(j);
    } else {
      std::cout << "answer set " << n << ": " << profile_text(p, facts) << "\n";
      if (!atoms.empty()) {
        std::cout << " ";
        for (const auto& a : atoms) std::cout << " " << a;
        std::cout << "\n";
      }
      if (q) std::cout << "  query holds: " << (s.holds(query_target(*q, facts)) ? "yes" : "no") << "\n";
    }
    return n < c.limit;
  });
  if (json_output(c)) {
    std::cout << all.dump(2) << "\n";
  } else if (n == 0) {
    std::cout << "inconsistent KB: no answer set\n";
  }
  return n == 0 ? kNoModel : 0;
}

int cmd_normalize(const RunConfig& c) {
  NormalizedKB nkb = normalize(read_kb_file(c.input));
  if (json_output(c)) {
    json fresh = json::object();
    for (const auto& [name, origin] : nkb.fresh_names) fresh[name.str()] = to_string(origin);
    json axioms = json::array();
    for (const auto& a : nkb.kb.axioms()) axioms.push_back(to_string(a));
    std::cout << json{{"axioms", axioms}, {"fresh_names", fresh}}.dump(2) << "\n";
    return 0;
  }
  std::cout << print_kb(nkb.kb);
  if (!nkb.fresh_names.empty()) {
    std::cout << "\n# fresh names\n";
    for (const auto& [name, origin] : nkb.fresh_names) {
      std::cout << "#   " << name.str() << " for " << to_string(origin) << "\n";
    }
  }
  return 0;
}

int cmd_emit(const RunConfig& c) {
  Document doc = read_document_file(c.input);
  std::optional<Query> q;
  if (!c.query.empty()) q = parse_query(c.query, doc.kb);
  std::cout << emit_program(doc.kb, q, mode_of(c), limits_of(c));
  return 0;
}

std::string pdlp_text(const Pdlp& p) {
  std::string s = p.to_string();
  for (auto& ch : s) {
    if (ch == '\n') ch = ';';
  }
  return s;
}

int cmd_pdlp(const RunConfig& c, int random, const std::string& file, const std::string& lit) {
  ReasonerOptions options{limits_of(c), c.limit};
  std::vector<std::pair<Pdlp, CrossCheck>> results;
  if (!file.empty()) {
    Pdlp p = read_pdlp_file(file);
    if (lit.empty()) {
      for (auto& r : cross_check(p, options)) results.emplace_back(p, r);
    } else {
      results.emplace_back(p, cross_check(p, parse_literal(p, lit), options));
    }
  } else {
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < random; ++i) {
      Pdlp p = random_pdlp(rng);
      for (auto& r : cross_check(p, options)) results.emplace_back(p, r);
    }
  }
  size_t agree = 0;
  json rows = json::array();
  for (const auto& [p, r] : results) {
    agree += r.agree;
    if (json_output(c)) {
      json row = {{"program", pdlp_text(p)},
                  {"literal", p.to_string(r.literal)},
                  {"bruteforce", r.bruteforce},
                  {"reasoner", to_string(r.reasoner)},
                  {"agree", r.agree}};
      rows.push_back(row);
    } else if (!file.empty() || !r.agree) {
      std::cout << (r.agree ? "agree" : "DISAGREE") << "  " << p.to_string(r.literal)
                << "  min-entailed=" << (r.bruteforce ? "yes" : "no")
                << "  tmin=" << to_string(r.reasoner) << "\n";
      if (!r.agree && random == 0) std::cout << r.trace << "\n";
    }
  }
  if (json_output(c)) {
    std::cout << json{{"checks", results.size()}, {"agree", agree}, {"results", rows}}.dump(2) << "\n";
  } else {
    std::cout << agree << "/" << results.size() << " literals agree\n";
  }
  return agree == results.size() ? 0 : 1;
}

std::vector<BenchDimension> dimensions_of(const std::string& d) {
  if (d == "abox") return {BenchDimension::ABox};
  if (d == "kb") return {BenchDimension::KB};
  if (d == "both") return {BenchDimension::ABox, BenchDimension::KB};
  throw CLI::ValidationError("--dimension", "expected abox, kb or both");
}

int cmd_bench(const RunConfig& c, const std::string& dimension, const std::vector<int>& multipliers) {
  Document doc = c.input.empty() ? parse_document(*bundled_fixture("ex1"), "ex1") : read_document_file(c.input);
  BenchTable t = run_bench(doc.kb, doc.queries, dimensions_of(dimension), multipliers, limits_of(c));
  if (json_output(c)) {
    std::cout << t.to_json().dump(2) << "\n";
  } else {
    std::cout << t.to_text();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typik: instance checking under typicality in SROEL(⊓,×) with rational, tmin and tmin-abox entailment"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", cfg.input, "knowledge base (.tkb)");
    if (input_required) in->required()->check(CLI::ExistingFile);
    sub->add_option("--budget", cfg.budget, "time budget in seconds")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_query = [&](CLI::App* sub) {
    sub->add_option("--query", cfg.query, "query such as \"T(Student)(mario)\" or \"Young(mario)\"");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "entailment mode")
        ->check(CLI::IsMember({"rational", "tmin", "tmin-abox"}));
  };

  auto* check = app.add_subcommand("check", "decide entailment of a query");
  add_common(check, true);
  add_query(check);
  add_mode(check);
  check->add_option("--limit", cfg.limit, "maximum number of witness profiles")->check(CLI::PositiveNumber);

  auto* models = app.add_subcommand("models", "list answer sets in canonical order");
  add_common(models, true);
  add_query(models);
  cfg.limit = 3;
  models->add_option("--limit", cfg.limit, "maximum number of answer sets")->check(CLI::PositiveNumber);

  auto* norm = app.add_subcommand("normalize", "print the normalized knowledge base");
  add_common(norm, true);

  auto* emit = app.add_subcommand("emit-asp", "print the answer set program");
  add_common(emit, true);
  add_query(emit);
  add_mode(emit);

  int random = 0;
  std::string pdlp_file;
  std::string lit;
  auto* pdlp = app.add_subcommand("pdlp", "cross-check the PDLP reduction against brute force");
  pdlp->add_option("--random", random, "number of random programs")->check(CLI::NonNegativeNumber);
  pdlp->add_option("--file", pdlp_file, "program file")->check(CLI::ExistingFile);
  pdlp->add_option("--lit", lit, "literal such as p or -p");
  pdlp->add_option("--seed", cfg.seed, "seed for random programs");
  pdlp->add_option("--budget", cfg.budget, "time budget per query in seconds")->check(CLI::PositiveNumber);
  pdlp->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string dimension = "both";
  std::vector<int> multipliers{1, 2, 4, 6, 8};
  auto* bench = app.add_subcommand("bench", "time the tmin-abox pipeline on replicated KBs");
  add_common(bench, false);
  bench->add_option("--dimension", dimension, "abox, kb or both")->check(CLI::IsMember({"abox", "kb", "both"}));
  bench->add_option("--multipliers", multipliers, "replication factors")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*models) return cmd_models(cfg);
    if (*norm) return cmd_normalize(cfg);
    if (*emit) return cmd_emit(cfg);
    if (*pdlp) {
      if (pdlp_file.empty() == (random == 0)) {
        std::cerr << "error: give either --file or --random\n";
        return kUsage;
      }
      return cmd_pdlp(cfg, random, pdlp_file, lit);
    }
    if (*bench) return cmd_bench(cfg, dimension, multipliers);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
