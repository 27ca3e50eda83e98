#pragma once

#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "typik/engine.hpp"
#include "typik/kb.hpp"
#include "typik/normalizer.hpp"
#include "typik/program.hpp"

namespace typik {

struct RankProfile {
  struct ConceptRank {
    int rank;
    bool instance;
    friend bool operator==(const ConceptRank&, const ConceptRank&) = default;
  };
  std::vector<ConceptRank> concept_ranks;  // by auxtc index
  std::vector<int> individual_ranks;       // by named constant

  static RankProfile of(const AnswerSet& s);
  nlohmann::json to_json(const ProgramFacts& f) const;
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

// Auxtc indices of the concepts that have an instance in some answer set.
std::vector<int> satisfiable_concepts(Engine& engine);

bool t_complete(const AnswerSet& s, const std::vector<int>& satisfiable);

// One Pareto-minimal vector with a realizing answer set.
struct FrontEntry {
  std::vector<int> vector;
  AnswerSet representative;
  // Answer sets sharing the vector; filled only when counting was requested.
  std::optional<uint64_t> count;
};

// Constants whose ranks make up the preference vector over the satisfiable T-concepts.
std::vector<int> preference_constants(const ProgramFacts& f, const std::vector<int>& satisfiable);

// Search spec restricted to T-complete answer sets.
SearchSpec t_complete_spec(const ProgramFacts& f, const std::vector<int>& satisfiable);

// Pareto-minimal rank vectors of the satisfiable T-concepts over T-complete answer sets.
// Throws NoModel or NoTCompleteModel.
std::vector<FrontEntry> t_minimal_front(Engine& engine, const std::vector<int>& satisfiable,
                                        bool count = false);

// Pareto-minimal named-individual rank vectors among the T-minimal answer sets.
std::vector<FrontEntry> abox_minimal_front(Engine& engine, const std::vector<int>& satisfiable,
                                           const std::vector<FrontEntry>& t_front,
                                           bool count = false);

enum class Answer { Entailed, NotEntailed, NoModel, NoTCompleteModel };
std::string to_string(Answer a);

struct Verdict {
  Query query;
  Mode mode = Mode::Rational;
  Answer answer = Answer::NoModel;
  // Minimal profiles; for NotEntailed the first one falsifies the query.
  std::vector<RankProfile> witnesses;
  // inst/typ atoms over named constants in the falsifying answer set.
  std::vector<Atom> falsifying_atoms;
  std::string message;
  SearchStats stats;
  double seconds = 0;
  std::shared_ptr<const ProgramFacts> facts;

  nlohmann::json to_json() const;
};

struct ReasonerOptions {
  Limits limits;
  size_t witness_limit = 3;
};

// Entailment in the three modes, caching satisfiability and fronts per T-signature.
class Reasoner {
 public:
  explicit Reasoner(const KnowledgeBase& kb, ReasonerOptions options = {});

  const NormalizedKB& normalized() const { return nkb_; }
  ReasonerOptions& options() { return options_; }

  Verdict entails(const Query& q, Mode mode);

  struct Context;
  // Program, engine and cached results for the T-signature of the query.
  Context& context(const std::optional<Query>& q);

 private:
  Verdict decide(Context& ctx, const Query& q, Mode mode);

  NormalizedKB nkb_;
  ReasonerOptions options_;
  std::map<std::vector<int>, std::unique_ptr<Context>> contexts_;
};

struct Reasoner::Context {
  std::shared_ptr<const ProgramFacts> facts;
  Engine engine;
  std::optional<bool> consistent;
  std::optional<std::vector<int>> satisfiable;
  std::optional<std::vector<FrontEntry>> t_front;
  std::optional<std::vector<FrontEntry>> abox_front;
  std::string t_front_error;

  explicit Context(ProgramFacts f);
};

// Normalizes kb and emits its program; non-rational modes carry the satisfiable concepts.
std::string emit_program(const KnowledgeBase& kb, const std::optional<Query>& query, Mode mode,
                         Limits limits = {});

// One-shot convenience wrapper.
Verdict entails(const KnowledgeBase& kb, const Query& q, Mode mode, ReasonerOptions options = {});

}  // namespace typik
