#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typik/kb.hpp"
#include "typik/normalizer.hpp"

namespace typik {

enum class Pred {
  nom, cls, rol, top, bot, subClass, subConj, subEx, supEx, subSelf, supSelf, subRole,
  subRChain, subRConj, subProd, supProd, supTyp, subTyp, auxtc, auxsupex, upperbound,
  inst, typ, triple, self, rank, box_neg, possrank, some_at, hasdiffrank, ind, occurs,
  satisfiable, unsatisfiable, inst_s
};

std::string_view predicate_name(Pred p);
// Every predicate of the vocabulary, in declaration order.
const std::vector<Pred>& all_predicates();
int arity(Pred p);

struct Atom {
  Pred pred;
  std::vector<std::string> args;
  bool negated = false;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& a);

// Concept position of a fact: a concept name or the nominal of a named individual.
struct ClassRef {
  bool nominal = false;
  int index = 0;
  friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

struct Constant {
  enum class Kind { Named, AuxSupex, AuxTc };
  Kind kind;
  std::string symbol;
  // Named: individual index. AuxSupex: axiom index in the normalized KB. AuxTc: index in
  // the typicality signature.
  int source;
};

// Input translation of a normalized KB: typed facts plus their atom listing.
struct ProgramFacts {
  std::vector<ConceptName> concepts;  // 0 is Top, 1 is Bot
  std::vector<RoleName> roles;
  std::vector<IndividualName> individuals;
  std::vector<std::string> concept_symbols;
  std::vector<std::string> role_symbols;
  // Named individuals, then auxsupex constants, then auxtc constants.
  std::vector<Constant> constants;
  int n_named = 0;
  int n_supex = 0;
  int n_tc = 0;

  struct SubClass { ClassRef sub; ClassRef sup; };
  struct SubConj { int first; int second; int sup; };
  struct SubEx { int role; int filler; int sup; };
  struct SupEx { ClassRef sub; int role; ClassRef filler; int witness; };
  struct SubSelf { int role; int sup; };
  struct SupSelf { int sub; int role; };
  struct SubRole { int sub; int sup; };
  struct RoleTriple { int first; int second; int sup; };
  struct SubProd { int first; int second; int role; };
  struct SupProd { int role; int first; int second; };
  struct SupTyp { int sub; int typ; };
  struct SubTyp { int typ; int sup; };

  std::vector<int> top;  // includes Top itself
  std::vector<int> bot;  // includes Bot itself
  std::vector<SubClass> sub_class;
  std::vector<SubConj> sub_conj;
  std::vector<SubEx> sub_ex;
  std::vector<SupEx> sup_ex;
  std::vector<SubSelf> sub_self;
  std::vector<SupSelf> sup_self;
  std::vector<SubRole> sub_role;
  std::vector<RoleTriple> sub_rchain;
  std::vector<RoleTriple> sub_rconj;
  std::vector<SubProd> sub_prod;
  std::vector<SupProd> sup_prod;
  std::vector<SupTyp> sup_typ;
  std::vector<SubTyp> sub_typ;
  // Concept id of each auxtc constant, by auxtc index.
  std::vector<int> tc_concept;
  int upper_bound = 0;

  // Fact atoms in emission order.
  std::vector<Atom> atoms;

  // Surface rendering of what each auxiliary constant stands for.
  std::vector<std::string> constant_notes;

  int first_supex() const { return n_named; }
  int first_tc() const { return n_named + n_supex; }
  int constant_count() const { return n_named + n_supex + n_tc; }
  int tc_constant(int tc) const { return first_tc() + tc; }

  std::optional<int> concept_id(const ConceptName& c) const;
  std::optional<int> individual_id(const IndividualName& i) const;
  std::optional<int> role_id(const RoleName& r) const;
  // auxtc index whose concept is c.
  std::optional<int> tc_of_concept(int c) const;

  std::string class_symbol(ClassRef c) const;
};

// Engine-level form of pi_Q.
struct QueryTarget {
  bool typ = false;
  int constant = 0;
  int concept_index = 0;
};

// Throws NotNormalized when an axiom is outside the normal-form shapes.
ProgramFacts translate(const NormalizedKB& nkb, const std::optional<Query>& query = std::nullopt);

Atom query_atom(const Query& q, const ProgramFacts& facts);
QueryTarget query_target(const Query& q, const ProgramFacts& facts);

enum class Mode { Rational, TMin, TMinABox };
std::string to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct EmitOptions {
  Mode mode = Mode::Rational;
  // Concepts found satisfiable, as auxtc indices; exported as satisfiable/1 facts.
  std::vector<int> satisfiable;
};

// Whole program as answer-set-program text: facts, rules and preference directives.
std::string emit_asp(const NormalizedKB& nkb, const std::optional<Query>& query,
                     const EmitOptions& options);
std::string emit_asp(const ProgramFacts& facts, const EmitOptions& options);

}  // namespace typik
