#include "typik/program.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "typik/error.hpp"
#include "typik/validate.hpp"

namespace typik {

namespace {

struct PredInfo {
  Pred pred;
  const char* name;
  int arity;
};

const PredInfo kPreds[] = {
    {Pred::nom, "nom", 1},
    {Pred::cls, "cls", 1},
    {Pred::rol, "rol", 1},
    {Pred::top, "top", 1},
    {Pred::bot, "bot", 1},
    {Pred::subClass, "subClass", 2},
    {Pred::subConj, "subConj", 3},
    {Pred::subEx, "subEx", 3},
    {Pred::supEx, "supEx", 4},
    {Pred::subSelf, "subSelf", 2},
    {Pred::supSelf, "supSelf", 2},
    {Pred::subRole, "subRole", 2},
    {Pred::subRChain, "subRChain", 3},
    {Pred::subRConj, "subRConj", 3},
    {Pred::subProd, "subProd", 3},
    {Pred::supProd, "supProd", 3},
    {Pred::supTyp, "supTyp", 2},
    {Pred::subTyp, "subTyp", 2},
    {Pred::auxtc, "auxtc", 2},
    {Pred::auxsupex, "auxsupex", 1},
    {Pred::upperbound, "upperbound", 1},
    {Pred::inst, "inst", 2},
    {Pred::typ, "typ", 2},
    {Pred::triple, "triple", 3},
    {Pred::self, "self", 2},
    {Pred::rank, "rank", 2},
    {Pred::box_neg, "box_neg", 2},
    {Pred::possrank, "possrank", 1},
    {Pred::some_at, "some_at", 1},
    {Pred::hasdiffrank, "hasdiffrank", 2},
    {Pred::ind, "ind", 1},
    {Pred::occurs, "occurs", 1},
    {Pred::satisfiable, "satisfiable", 1},
    {Pred::unsatisfiable, "unsatisfiable", 1},
    {Pred::inst_s, "inst_s", 3},
};

const PredInfo& info(Pred p) { return kPreds[static_cast<int>(p)]; }

}  // namespace

std::string_view predicate_name(Pred p) { return info(p).name; }

int arity(Pred p) { return info(p).arity; }

const std::vector<Pred>& all_predicates() {
  static const std::vector<Pred> all = [] {
    std::vector<Pred> v;
    for (const auto& i : kPreds) v.push_back(i.pred);
    return v;
  }();
  return all;
}

std::string to_string(const Atom& a) {
  std::string out = a.negated ? "-" : "";
  out += predicate_name(a.pred);
  out += "(";
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += a.args[i];
  }
  out += ")";
  return out;
}

std::optional<int> ProgramFacts::concept_id(const ConceptName& c) const {
  auto it = std::find(concepts.begin(), concepts.end(), c);
  if (it == concepts.end()) return std::nullopt;
  return static_cast<int>(it - concepts.begin());
}

std::optional<int> ProgramFacts::individual_id(const IndividualName& i) const {
  auto it = std::find(individuals.begin(), individuals.end(), i);
  if (it == individuals.end()) return std::nullopt;
  return static_cast<int>(it - individuals.begin());
}

std::optional<int> ProgramFacts::role_id(const RoleName& r) const {
  auto it = std::find(roles.begin(), roles.end(), r);
  if (it == roles.end()) return std::nullopt;
  return static_cast<int>(it - roles.begin());
}

std::optional<int> ProgramFacts::tc_of_concept(int c) const {
  auto it = std::find(tc_concept.begin(), tc_concept.end(), c);
  if (it == tc_concept.end()) return std::nullopt;
  return static_cast<int>(it - tc_concept.begin());
}

std::string ProgramFacts::class_symbol(ClassRef c) const {
  return c.nominal ? constants[c.index].symbol : concept_symbols[c.index];
}

namespace {

std::string sanitize(const std::string& name) {
  std::string s;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    s += ok ? c : '_';
  }
  size_t first = s.find_first_not_of('_');
  if (first == std::string::npos) return s + "x";
  if (std::isdigit(static_cast<unsigned char>(s[first]))) {
    s.insert(first, "c");
  } else {
    s[first] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[first])));
  }
  return s;
}

class SymbolTable {
 public:
  std::string claim(const std::string& wanted) {
    std::string s = wanted;
    for (int k = 1; used_.count(s); ++k) s = wanted + "_" + std::to_string(k);
    used_.insert(s);
    return s;
  }

 private:
  std::set<std::string> used_;
};

class Translator {
 public:
  Translator(const NormalizedKB& nkb, const std::optional<Query>& query)
      : nkb_(nkb), query_(query) {}

  ProgramFacts run() {
    const auto& kb = nkb_.kb;
    for (const auto& ax : kb.axioms()) {
      if (!is_normal(ax)) throw NotNormalized("axiom not in normal form: " + to_string(ax));
    }
    auto tsig = typicality_signature(kb, query_);
    if (query_) {
      if (!kb.signature.contains(query_->individual)) {
        throw Error("query individual " + query_->individual.str() + " is not declared");
      }
      if (!kb.signature.contains(query_->concept_name)) {
        throw Error("query concept " + query_->concept_name.str() + " is not declared");
      }
    }

    f_.concepts = kb.signature.all_concepts();
    f_.roles = kb.signature.roles();
    f_.individuals = kb.signature.individuals();

    // Reserved symbols first, so user names yield to them.
    SymbolTable syms;
    const auto axioms = kb.axioms();
    std::vector<int> supex_axioms;
    for (size_t i = 0; i < axioms.size(); ++i) {
      if (const auto* ci = std::get_if<ConceptInclusion>(&axioms[i])) {
        if (ci->lhs.is_named() && ci->rhs.kind() == Concept::Kind::Exists) {
          supex_axioms.push_back(static_cast<int>(i));
        }
      }
    }
    std::vector<std::string> supex_syms, tc_syms;
    for (int i : supex_axioms) supex_syms.push_back(syms.claim("auxex_" + std::to_string(i)));
    for (size_t i = 0; i < tsig.concepts_tkq.size(); ++i) {
      tc_syms.push_back(syms.claim("auxtc_" + std::to_string(i)));
    }
    for (const auto& c : f_.concepts) {
      if (c == top_name()) {
        f_.concept_symbols.push_back(syms.claim("thing"));
      } else if (c == bot_name()) {
        f_.concept_symbols.push_back(syms.claim("nothing"));
      } else {
        f_.concept_symbols.push_back(syms.claim(sanitize(c.str())));
      }
    }
    for (const auto& r : f_.roles) f_.role_symbols.push_back(syms.claim(sanitize(r.str())));
    for (size_t i = 0; i < f_.individuals.size(); ++i) {
      f_.constants.push_back({Constant::Kind::Named, syms.claim(sanitize(f_.individuals[i].str())),
                              static_cast<int>(i)});
      f_.constant_notes.push_back(f_.individuals[i].str());
    }
    f_.n_named = static_cast<int>(f_.individuals.size());
    for (size_t k = 0; k < supex_axioms.size(); ++k) {
      f_.constants.push_back({Constant::Kind::AuxSupex, supex_syms[k], supex_axioms[k]});
      f_.constant_notes.push_back(to_string(axioms[supex_axioms[k]]));
    }
    f_.n_supex = static_cast<int>(supex_axioms.size());
    for (size_t k = 0; k < tsig.concepts_tkq.size(); ++k) {
      const Concept& c = tsig.concepts_tkq[k];
      if (!c.is_named()) throw NotNormalized("typicality argument not a concept name: " + to_string(c));
      f_.constants.push_back({Constant::Kind::AuxTc, tc_syms[k], static_cast<int>(k)});
      auto origin = nkb_.origin(c.name());
      f_.constant_notes.push_back("T(" + to_string(origin ? *origin : c) + ")");
      f_.tc_concept.push_back(*f_.concept_id(c.name()));
    }
    f_.n_tc = static_cast<int>(tsig.concepts_tkq.size());
    f_.upper_bound = static_cast<int>(tsig.upper_bound());

    for (int i = 0; i < f_.n_named; ++i) fact(Pred::nom, {f_.constants[i].symbol});
    for (const auto& s : f_.concept_symbols) fact(Pred::cls, {s});
    for (const auto& s : f_.role_symbols) fact(Pred::rol, {s});

    size_t supex_k = 0;
    for (size_t i = 0; i < axioms.size(); ++i) {
      int witness = -1;
      if (supex_k < supex_axioms.size() && supex_axioms[supex_k] == static_cast<int>(i)) {
        witness = f_.first_supex() + static_cast<int>(supex_k++);
      }
      axiom(axioms[i], witness);
    }

    for (int k = 0; k < f_.n_supex; ++k) fact(Pred::auxsupex, {f_.constants[f_.first_supex() + k].symbol});
    for (int k = 0; k < f_.n_tc; ++k) {
      fact(Pred::auxtc, {f_.constants[f_.tc_constant(k)].symbol, f_.concept_symbols[f_.tc_concept[k]]});
    }
    f_.top.push_back(0);
    fact(Pred::top, {f_.concept_symbols[0]});
    f_.bot.push_back(1);
    fact(Pred::bot, {f_.concept_symbols[1]});
    fact(Pred::upperbound, {std::to_string(f_.upper_bound)});
    return std::move(f_);
  }

 private:
  void fact(Pred p, std::vector<std::string> args) { f_.atoms.push_back({p, std::move(args)}); }

  int cid(const Concept& c) const { return *f_.concept_id(c.name()); }
  int rid(const RoleName& r) const { return *f_.role_id(r); }
  int iid(const IndividualName& i) const { return *f_.individual_id(i); }
  const std::string& csym(int c) const { return f_.concept_symbols[c]; }
  const std::string& rsym(int r) const { return f_.role_symbols[r]; }
  const std::string& isym(int i) const { return f_.constants[i].symbol; }

  void axiom(const Axiom& ax, int witness) {
    using K = Concept::Kind;
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      const Concept& l = ci->lhs;
      const Concept& r = ci->rhs;
      if (l.is_named()) {
        int a = cid(l);
        switch (r.kind()) {
          case K::Atom:
          case K::Top:
          case K::Bot: {
            int c = cid(r);
            if (l.kind() == K::Top) {
              f_.top.push_back(c);
              fact(Pred::top, {csym(c)});
            } else if (r.kind() == K::Bot) {
              f_.bot.push_back(a);
              fact(Pred::bot, {csym(a)});
            } else {
              f_.sub_class.push_back({{false, a}, {false, c}});
              fact(Pred::subClass, {csym(a), csym(c)});
            }
            return;
          }
          case K::Nominal: {
            int c = iid(r.individual());
            f_.sub_class.push_back({{false, a}, {true, c}});
            fact(Pred::subClass, {csym(a), isym(c)});
            return;
          }
          case K::Exists: {
            int role = rid(r.role());
            int b = cid(r.filler());
            f_.sup_ex.push_back({{false, a}, role, {false, b}, witness});
            fact(Pred::supEx, {csym(a), rsym(role), csym(b), isym(witness)});
            return;
          }
          case K::Self: {
            int role = rid(r.role());
            f_.sup_self.push_back({a, role});
            fact(Pred::supSelf, {csym(a), rsym(role)});
            return;
          }
          case K::Typ: {
            int b = cid(r.argument());
            f_.sup_typ.push_back({a, b});
            fact(Pred::supTyp, {csym(a), csym(b)});
            return;
          }
          default:
            break;
        }
      } else {
        int c = cid(r);
        switch (l.kind()) {
          case K::Conj: {
            int a = cid(l.left());
            int b = cid(l.right());
            f_.sub_conj.push_back({a, b, c});
            fact(Pred::subConj, {csym(a), csym(b), csym(c)});
            return;
          }
          case K::Exists: {
            int role = rid(l.role());
            int a = cid(l.filler());
            f_.sub_ex.push_back({role, a, c});
            fact(Pred::subEx, {rsym(role), csym(a), csym(c)});
            return;
          }
          case K::Nominal: {
            int a = iid(l.individual());
            f_.sub_class.push_back({{true, a}, {false, c}});
            fact(Pred::subClass, {isym(a), csym(c)});
            return;
          }
          case K::Self: {
            int role = rid(l.role());
            f_.sub_self.push_back({role, c});
            fact(Pred::subSelf, {rsym(role), csym(c)});
            return;
          }
          case K::Typ: {
            int b = cid(l.argument());
            f_.sub_typ.push_back({b, c});
            fact(Pred::subTyp, {csym(b), csym(c)});
            return;
          }
          default:
            break;
        }
      }
      throw NotNormalized("axiom not in normal form: " + to_string(ax));
    }
    if (const auto* x = std::get_if<RoleInclusion>(&ax)) {
      f_.sub_role.push_back({rid(x->sub), rid(x->super)});
      fact(Pred::subRole, {rsym(rid(x->sub)), rsym(rid(x->super))});
    } else if (const auto* x = std::get_if<RoleChain>(&ax)) {
      f_.sub_rchain.push_back({rid(x->first), rid(x->second), rid(x->super)});
      fact(Pred::subRChain, {rsym(rid(x->first)), rsym(rid(x->second)), rsym(rid(x->super))});
    } else if (const auto* x = std::get_if<RoleConj>(&ax)) {
      f_.sub_rconj.push_back({rid(x->first), rid(x->second), rid(x->super)});
      fact(Pred::subRConj, {rsym(rid(x->first)), rsym(rid(x->second)), rsym(rid(x->super))});
    } else if (const auto* x = std::get_if<ConceptProductLhs>(&ax)) {
      int a = cid(x->first), b = cid(x->second), r = rid(x->super);
      f_.sub_prod.push_back({a, b, r});
      fact(Pred::subProd, {csym(a), csym(b), rsym(r)});
    } else if (const auto* x = std::get_if<ConceptProductRhs>(&ax)) {
      int r = rid(x->sub), a = cid(x->first), b = cid(x->second);
      f_.sup_prod.push_back({r, a, b});
      fact(Pred::supProd, {rsym(r), csym(a), csym(b)});
    } else if (const auto* x = std::get_if<ConceptAssertion>(&ax)) {
      int a = iid(x->individual), c = cid(x->description);
      f_.sub_class.push_back({{true, a}, {false, c}});
      fact(Pred::subClass, {isym(a), csym(c)});
    } else if (const auto* x = std::get_if<RoleAssertion>(&ax)) {
      int a = iid(x->subject), b = iid(x->object), r = rid(x->role);
      f_.sup_ex.push_back({{true, a}, r, {true, b}, b});
      fact(Pred::supEx, {isym(a), rsym(r), isym(b), isym(b)});
    }
  }

  const NormalizedKB& nkb_;
  const std::optional<Query>& query_;
  ProgramFacts f_;
};

}  // namespace

ProgramFacts translate(const NormalizedKB& nkb, const std::optional<Query>& query) {
  return Translator(nkb, query).run();
}

QueryTarget query_target(const Query& q, const ProgramFacts& facts) {
  auto a = facts.individual_id(q.individual);
  auto c = facts.concept_id(q.concept_name);
  if (!a || !c) throw Error("query uses names outside the program: " + to_string(q));
  if (q.kind == Query::Kind::Typ && !facts.tc_of_concept(*c)) {
    throw Error("query concept has no typicality constant: " + to_string(q));
  }
  return {q.kind == Query::Kind::Typ, *a, *c};
}

Atom query_atom(const Query& q, const ProgramFacts& facts) {
  auto t = query_target(q, facts);
  return {t.typ ? Pred::typ : Pred::inst,
          {facts.constants[t.constant].symbol, facts.concept_symbols[t.concept_index]}};
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Rational:
      return "rational";
    case Mode::TMin:
      return "tmin";
    case Mode::TMinABox:
      return "tmin-abox";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "rational") return Mode::Rational;
  if (s == "tmin") return Mode::TMin;
  if (s == "tmin-abox" || s == "tmin_abox") return Mode::TMinABox;
  return std::nullopt;
}

namespace {

const char* const kSaturation[] = {
    "inst(X,X) :- nom(X).",
    "self(X,V) :- nom(X), triple(X,V,X).",
    "inst(X,Z) :- top(Z), inst(X,Z1).",
    "inst(X,Z) :- subClass(Y,Z), inst(X,Y).",
    "inst(X,Z) :- subConj(Y1,Y2,Z), inst(X,Y1), inst(X,Y2).",
    "inst(X,Z) :- subEx(V,Y,Z), triple(X,V,X1), inst(X1,Y).",
    "inst(X,Z) :- subEx(V,Y,Z), self(X,V), inst(X,Y).",
    "triple(X,V,X1) :- supEx(Y,V,Z,X1), inst(X,Y).",
    "inst(X1,Z) :- supEx(Y,V,Z,X1), inst(X,Y).",
    "inst(X,Z) :- subSelf(V,Z), self(X,V).",
    "self(X,V) :- supSelf(Y,V), inst(X,Y).",
    "triple(X,W,X1) :- subRole(V,W), triple(X,V,X1).",
    "self(X,W) :- subRole(V,W), self(X,V).",
    "triple(X,W,X2) :- subRChain(U,V,W), triple(X,U,X1), triple(X1,V,X2).",
    "triple(X,W,X1) :- subRChain(U,V,W), self(X,U), triple(X,V,X1).",
    "triple(X,W,X1) :- subRChain(U,V,W), triple(X,U,X1), self(X1,V).",
    "triple(X,W,X) :- subRChain(U,V,W), self(X,U), self(X,V).",
    "triple(X,W,X1) :- subRConj(V1,V2,W), triple(X,V1,X1), triple(X,V2,X1).",
    "self(X,W) :- subRConj(V1,V2,W), self(X,V1), self(X,V2).",
    "triple(X,W,X1) :- subProd(Y1,Y2,W), inst(X,Y1), inst(X1,Y2).",
    "self(X,W) :- subProd(Y1,Y2,W), inst(X,Y1), inst(X,Y2).",
    "inst(X,Z1) :- supProd(V,Z1,Z2), triple(X,V,X1).",
    "inst(X,Z1) :- supProd(V,Z1,Z2), self(X,V).",
    "inst(X1,Z2) :- supProd(V,Z1,Z2), triple(X,V,X1).",
    "inst(X,Z2) :- supProd(V,Z1,Z2), self(X,V).",
    "inst(Y,Z) :- inst(X,Y), nom(Y), inst(X,Z).",
    "inst(X,Z) :- inst(X,Y), nom(Y), inst(Y,Z).",
    "triple(Z,U,Y) :- inst(X,Y), nom(Y), triple(Z,U,X).",
    "typ(X,Z) :- supTyp(Y,Z), inst(X,Y).",
    "inst(X,Z) :- subTyp(Y,Z), typ(X,Y).",
};

const char* const kRanking[] = {
    "ind(X) :- nom(X).",
    "ind(X) :- auxsupex(X).",
    "ind(X) :- auxtc(X,C).",
    "possrank(0..N) :- upperbound(N).",
    "rank(X,K) :- ind(X), possrank(K), not hasdiffrank(X,K).",
    "hasdiffrank(X,K) :- possrank(K), rank(X,J), J != K.",
    "some_at(K) :- rank(X,K).",
    ":- some_at(K1), K1 = K+1, possrank(K), not some_at(K).",
    ":- -box_neg(K,Y), auxtc(AUX,Y), rank(AUX,H), K <= H.",
    "box_neg(K1,Y) :- box_neg(K,Y), possrank(K1), K1 = K-1.",
    "-inst(X,Y) :- box_neg(K,Y), rank(X,K1), K1 = K-1.",
    "-box_neg(K1,Y) :- auxtc(AUX,Y), rank(AUX,K), inst(AUX,Y), K1 = K+1.",
    "-box_neg(K1,Y) :- -box_neg(K,Y), possrank(K1), K1 = K+1.",
    "box_neg(N,Y) :- auxtc(AUX,Y), -inst(AUX,Y), upperbound(N).",
    "rank(Y,H) :- nom(Y), inst(X,Y), rank(X,H).",
    "inst(X,Y) :- typ(X,Y).",
    "typ(X,Y) :- inst(X,Y), rank(X,K), box_neg(K,Y).",
    "box_neg(K,Y) :- typ(X,Y), rank(X,K).",
    "box_neg(K,Y) :- auxtc(AUX,Y), rank(AUX,K).",
    "inst(AUX,Y) :- auxtc(AUX,Y), inst(X,Y).",
    "-inst(AUX,Y) :- auxtc(AUX,Y), not inst(AUX,Y).",
    "inst(AUX,Y) :- auxtc(AUX,Y), not -inst(AUX,Y).",
    ":- bot(Z), inst(U,Z).",
};

void rule(std::string& out, const char* text) {
  out += text;
  out += "\n";
}

std::string preference_rank(const std::string& name, const std::string& constant) {
  return "#preference(" + name + ", less(weight)){ X,X :: rank(" + constant +
         ",X) : possrank(X) }.\n";
}

std::string pareto(const std::string& name, const std::vector<std::string>& parts) {
  std::string out = "#preference(" + name + ", pareto){ ";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += "name(" + parts[i] + ")";
  }
  return out + (parts.empty() ? "}.\n" : " }.\n");
}

}  // namespace

std::string emit_asp(const ProgramFacts& f, const EmitOptions& options) {
  std::string out;
  out += "% typik program, mode " + to_string(options.mode) + "\n";
  for (int i = f.n_named; i < f.constant_count(); ++i) {
    out += "% " + f.constants[i].symbol + ": " + f.constant_notes[i] + "\n";
  }
  out += "\n% facts\n";
  for (const auto& a : f.atoms) out += to_string(a) + ".\n";
  out += "\n% saturation\n";
  for (const char* r : kSaturation) rule(out, r);
  out += "\n% ranks and typicality\n";
  for (const char* r : kRanking) rule(out, r);
  if (options.mode == Mode::Rational) return out;

  out += "\n% typicality completion\n";
  for (int k = 0; k < f.n_tc; ++k) {
    out += "occurs(" + f.concept_symbols[f.tc_concept[k]] + ").\n";
  }
  std::vector<int> sat = options.satisfiable;
  std::sort(sat.begin(), sat.end());
  for (int k : sat) out += "satisfiable(" + f.concept_symbols[f.tc_concept[k]] + ").\n";
  rule(out, "inst(X,Y) :- occurs(Y), auxtc(X,Y), satisfiable(Y).");
  rule(out, "inst_s(Y,Y,Y) :- occurs(Y).");
  if (f.n_tc == 0) return out;

  out += "\n% preferences\n";
  std::vector<std::string> tbox;
  for (int k = 0; k < f.n_tc; ++k) {
    std::string name = "p_" + std::to_string(k + 1);
    out += preference_rank(name, f.constants[f.tc_constant(k)].symbol);
    tbox.push_back(name);
  }
  out += pareto("p-tbox", tbox);
  if (options.mode == Mode::TMin) {
    out += "#optimize(p-tbox).\n";
    return out;
  }
  std::vector<std::string> abox;
  for (int i = 0; i < f.n_named; ++i) {
    std::string name = "p_" + f.constants[i].symbol;
    out += preference_rank(name, f.constants[i].symbol);
    abox.push_back(name);
  }
  out += pareto("p-abox", abox);
  out += "#preference(p-lex, lexico){ 2 :: name(p-tbox); 1 :: name(p-abox) }.\n";
  out += "#optimize(p-lex).\n";
  return out;
}

std::string emit_asp(const NormalizedKB& nkb, const std::optional<Query>& query,
                     const EmitOptions& options) {
  return emit_asp(translate(nkb, query), options);
}

}  // namespace typik
