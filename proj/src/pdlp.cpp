#include "typik/pdlp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "typik/error.hpp"

namespace typik {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

}  // namespace

void Pdlp::validate() const {
  for (size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].empty()) throw InvalidPdlp("clause " + std::to_string(j + 1) + " is empty");
    bool positive = false;
    for (const auto& l : clauses[j]) {
      if (l.var < 0 || l.var >= static_cast<int>(vars.size())) {
        throw InvalidPdlp("clause " + std::to_string(j + 1) + " uses an unknown variable");
      }
      positive |= l.positive;
    }
    if (!positive) {
      throw InvalidPdlp("clause " + std::to_string(j + 1) + " has no positive literal");
    }
  }
}

std::string Pdlp::to_string(const Literal& l) const {
  return (l.positive ? "" : "-") + vars[l.var];
}

std::string Pdlp::to_string() const {
  std::string out;
  for (const auto& c : clauses) {
    for (size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + to_string(c[i]);
    out += "\n";
  }
  return out;
}

std::vector<Literal> Pdlp::literals() const {
  std::vector<Literal> out;
  for (size_t v = 0; v < vars.size(); ++v) out.push_back({static_cast<int>(v), true});
  for (size_t v = 0; v < vars.size(); ++v) out.push_back({static_cast<int>(v), false});
  return out;
}

Pdlp parse_pdlp(std::string_view text) {
  Pdlp p;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<Literal> clause;
    std::string w;
    while (words >> w) {
      bool positive = w[0] != '-';
      std::string name = positive ? w : w.substr(1);
      if (!is_identifier(name)) {
        throw InvalidPdlp("line " + std::to_string(line_no) + ": bad literal '" + w + "'");
      }
      auto it = std::find(p.vars.begin(), p.vars.end(), name);
      int v = static_cast<int>(it - p.vars.begin());
      if (it == p.vars.end()) p.vars.push_back(name);
      clause.push_back({v, positive});
    }
    if (!clause.empty()) p.clauses.push_back(std::move(clause));
  }
  p.validate();
  return p;
}

Pdlp read_pdlp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pdlp(ss.str());
}

Literal parse_literal(const Pdlp& p, std::string_view text) {
  bool positive = text.empty() || text[0] != '-';
  std::string_view name = positive ? text : text.substr(1);
  auto it = std::find(p.vars.begin(), p.vars.end(), name);
  if (it == p.vars.end()) throw InvalidPdlp("unknown variable in literal '" + std::string(text) + "'");
  return {static_cast<int>(it - p.vars.begin()), positive};
}

Query PdlpReduction::query(const Literal& l) const {
  if (l.positive) return Query::typ(individual, positive[l.var]);
  return Query::inst(individual, negative[l.var]);
}

PdlpReduction reduce(const Pdlp& p) {
  p.validate();
  PdlpReduction r;
  KnowledgeBase& kb = r.kb;
  const RoleName u("U");
  const ConceptName h("H");
  const ConceptName ds("D_S");
  r.individual = IndividualName("a");
  for (const auto& v : p.vars) r.positive.emplace_back("P_" + v);
  for (const auto& v : p.vars) r.negative.emplace_back("N_" + v);
  std::vector<ConceptName> d;
  for (size_t j = 0; j < p.clauses.size(); ++j) d.emplace_back("D_" + std::to_string(j + 1));

  for (const auto& c : r.positive) kb.signature.add(c);
  for (const auto& c : r.negative) kb.signature.add(c);
  kb.signature.add(h);
  kb.signature.add(ds);
  for (const auto& c : d) kb.signature.add(c);
  kb.signature.add(u);
  kb.signature.add(r.individual);

  const Concept a = Concept::nominal(r.individual);
  const Concept typ_top = Concept::typ(Concept::top());
  auto typical = [&](int v) { return Concept::typ(Concept::atom(r.positive[v])); };
  auto somewhere_normal = [&](int v) {
    return Concept::exists(u, Concept::conj(typ_top, Concept::atom(r.positive[v])));
  };
  auto lit = [&](const Literal& l) { return l.positive ? typical(l.var) : somewhere_normal(l.var); };
  auto complement = [&](const Literal& l) {
    return l.positive ? somewhere_normal(l.var) : typical(l.var);
  };
  auto conj_all = [](Concept c, const std::vector<Concept>& rest) {
    for (const auto& x : rest) c = Concept::conj(c, x);
    return c;
  };

  kb.tbox.push_back({Concept::conj(typ_top, Concept::atom(h)), Concept::bot()});
  for (size_t j = 0; j < p.clauses.size(); ++j) {
    for (const auto& l : p.clauses[j]) kb.tbox.push_back({Concept::conj(a, lit(l)), Concept::atom(d[j])});
    std::vector<Concept> bars;
    for (const auto& l : p.clauses[j]) bars.push_back(complement(l));
    kb.tbox.push_back({conj_all(Concept::conj(a, Concept::atom(d[j])), bars), Concept::bot()});
  }
  std::vector<Concept> ds_parts;
  for (const auto& c : d) ds_parts.push_back(Concept::atom(c));
  std::vector<Concept> rest(ds_parts.begin() + 1, ds_parts.end());
  kb.tbox.push_back({conj_all(Concept::conj(a, ds_parts[0]), rest), Concept::atom(ds)});
  kb.tbox.push_back({Concept::conj(a, Concept::atom(ds)), conj_all(ds_parts[0], rest)});
  for (size_t v = 0; v < p.vars.size(); ++v) {
    int vi = static_cast<int>(v);
    kb.tbox.push_back({typical(vi), Concept::atom(r.positive[v])});
    kb.tbox.push_back({somewhere_normal(vi), Concept::atom(r.negative[v])});
  }
  kb.rbox.push_back(ConceptProductLhs{Concept::top(), Concept::top(), u});

  for (const auto& c : r.positive) kb.abox.push_back(ConceptAssertion{Concept::atom(c), r.individual});
  kb.abox.push_back(ConceptAssertion{Concept::typ(Concept::atom(h)), r.individual});
  kb.abox.push_back(ConceptAssertion{Concept::atom(ds), r.individual});
  return r;
}

std::vector<std::vector<bool>> minimal_models(const Pdlp& p, int cap) {
  const int n = static_cast<int>(p.vars.size());
  if (n > cap) {
    throw CapExceeded(std::to_string(n) + " variables exceed the brute-force cap of " +
                      std::to_string(cap));
  }
  std::vector<uint32_t> models;
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
    bool ok = std::all_of(p.clauses.begin(), p.clauses.end(), [&](const auto& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
        return (((m >> l.var) & 1) != 0) == l.positive;
      });
    });
    if (ok) models.push_back(m);
  }
  std::vector<std::vector<bool>> out;
  for (uint32_t m : models) {
    bool minimal = std::none_of(models.begin(), models.end(),
                                [&](uint32_t o) { return o != m && (o & m) == o; });
    if (!minimal) continue;
    std::vector<bool> v(n);
    for (int i = 0; i < n; ++i) v[i] = (m >> i) & 1;
    out.push_back(v);
  }
  return out;
}

bool min_entails_bruteforce(const Pdlp& p, const Literal& l, int cap) {
  auto models = minimal_models(p, cap);
  return std::all_of(models.begin(), models.end(),
                     [&](const std::vector<bool>& m) { return m[l.var] == l.positive; });
}

namespace {

CrossCheck check_one(Reasoner& reasoner, const PdlpReduction& r, const Pdlp& p, const Literal& l) {
  CrossCheck c{l, min_entails_bruteforce(p, l), Answer::NoModel, false, {}};
  Verdict v = reasoner.entails(r.query(l), Mode::TMin);
  c.reasoner = v.answer;
  c.agree = (v.answer == Answer::Entailed) == c.bruteforce &&
            (v.answer == Answer::Entailed || v.answer == Answer::NotEntailed);
  if (!c.agree) {
    std::string models;
    for (const auto& m : minimal_models(p)) {
      models += " {";
      bool first = true;
      for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        models += (first ? "" : ",") + p.vars[i];
        first = false;
      }
      models += "}";
    }
    c.trace = "program:\n" + p.to_string() + "literal: " + p.to_string(l) +
              "\nminimal models:" + models + "\nreasoner: " + v.to_json().dump();
  }
  return c;
}

}  // namespace

std::vector<CrossCheck> cross_check(const Pdlp& p, ReasonerOptions options) {
  PdlpReduction r = reduce(p);
  Reasoner reasoner(r.kb, options);
  std::vector<CrossCheck> out;
  for (const auto& l : p.literals()) out.push_back(check_one(reasoner, r, p, l));
  return out;
}

CrossCheck cross_check(const Pdlp& p, const Literal& l, ReasonerOptions options) {
  PdlpReduction r = reduce(p);
  Reasoner reasoner(r.kb, options);
  return check_one(reasoner, r, p, l);
}

Pdlp random_pdlp(std::mt19937_64& rng, int max_vars, int max_clauses) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Pdlp p;
  int n = uniform(1, max_vars);
  for (int i = 0; i < n; ++i) p.vars.push_back(std::string(1, static_cast<char>('p' + i)));
  int m = uniform(1, max_clauses);
  for (int j = 0; j < m; ++j) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    int len = uniform(1, std::min(n, 3));
    std::vector<Literal> clause;
    for (int i = 0; i < len; ++i) clause.push_back({vars[i], uniform(0, 1) == 1});
    if (std::none_of(clause.begin(), clause.end(), [](const Literal& l) { return l.positive; })) {
      clause[uniform(0, len - 1)].positive = true;
    }
    std::sort(clause.begin(), clause.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    p.clauses.push_back(std::move(clause));
  }
  return p;
}

}  // namespace typik
