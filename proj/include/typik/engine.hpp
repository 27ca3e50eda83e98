#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "typik/program.hpp"

namespace typik {

namespace detail {
struct Compiled;
struct State;
}  // namespace detail

// Zero means unlimited.
struct Limits {
  double seconds = 0;
  uint64_t nodes = 0;
};

// Shared countdown for one reasoning task; throws BudgetExceeded when exhausted.
class Budget {
 public:
  explicit Budget(Limits limits = {});
  void tick();
  uint64_t nodes() const { return nodes_; }
  double elapsed_seconds() const;

 private:
  Limits limits_;
  std::chrono::steady_clock::time_point start_;
  uint64_t nodes_ = 0;
};

// The program's only nondeterminism: a rank per constant and the aux-instance choice.
struct Guess {
  std::vector<int> rank_of;     // by constant
  std::vector<bool> aux_inst;   // by auxtc index
  friend bool operator==(const Guess&, const Guess&) = default;
};

class AnswerSet {
 public:
  const ProgramFacts& facts() const;
  Guess guess() const;

  int rank(int constant) const;
  bool aux_instance(int tc) const;
  bool inst(int constant, ClassRef c) const;
  bool neg_inst(int constant, int tc) const;
  bool typ(int constant, int tc) const;
  bool triple(int x, int role, int y) const;
  bool self(int x, int role) const;
  bool box_neg(int k, int tc) const;
  bool neg_box_neg(int k, int tc) const;
  bool holds(const QueryTarget& q) const;

  // Derived atoms (inst, typ, triple, self, rank, box_neg and the negated forms).
  std::vector<Atom> atoms() const;
  // inst/typ atoms whose subject is a named constant.
  std::vector<Atom> named_atoms() const;

 private:
  friend class Engine;
  AnswerSet(std::shared_ptr<const detail::Compiled> prog, std::shared_ptr<const detail::State> st)
      : prog_(std::move(prog)), state_(std::move(st)) {}
  std::shared_ptr<const detail::Compiled> prog_;
  std::shared_ptr<const detail::State> state_;
};

// Rank domains of a partial assignment, as seen by search constraints.
class Domains {
 public:
  explicit Domains(std::vector<uint64_t>& dom) : dom_(dom) {}
  uint64_t get(int constant) const { return dom_[constant]; }
  int min(int constant) const;
  int max(int constant) const;
  // Narrows a domain; returns false if it becomes empty.
  bool restrict(int constant, uint64_t mask);
  bool changed() const { return changed_; }

 private:
  std::vector<uint64_t>& dom_;
  bool changed_ = false;
};

// Extra condition on the rank vector; prune must be sound and exact on full assignments.
class Constraint {
 public:
  virtual ~Constraint() = default;
  // Narrows domains where forced; returns false when no completion can satisfy it.
  virtual bool prune(Domains& d) const = 0;
};

using ConstraintPtr = std::shared_ptr<const Constraint>;

// Componentwise <= bound with at least one strict <.
ConstraintPtr strictly_below(std::vector<int> constants, std::vector<int> bound);
// Not weakly dominated (componentwise >=) by any of the vectors.
ConstraintPtr not_dominated(std::vector<int> constants, std::vector<std::vector<int>> front);
// Equal to one of the vectors.
ConstraintPtr member_of(std::vector<int> constants, std::vector<std::vector<int>> vectors);

struct SearchSpec {
  // Per-constant rank masks; empty means unrestricted.
  std::vector<uint64_t> rank_domain;
  // Per-auxtc allowed flags: bit 0 instance, bit 1 not instance; empty means unrestricted.
  std::vector<uint8_t> flag_domain;
  // Answer sets must not contain this atom.
  std::optional<QueryTarget> forbid;
  std::vector<ConstraintPtr> constraints;
};

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t conflicts = 0;
  uint64_t solutions = 0;
};

class Engine {
 public:
  explicit Engine(const ProgramFacts& facts, std::shared_ptr<Budget> budget = nullptr);
  ~Engine();

  const ProgramFacts& facts() const;
  Budget& budget() { return *budget_; }
  void set_budget(std::shared_ptr<Budget> budget) { budget_ = std::move(budget); }
  const SearchStats& stats() const { return stats_; }

  // First answer set in heuristic order.
  std::optional<AnswerSet> find(const SearchSpec& spec = {});
  // All answer sets in canonical order (lexicographic on rank vector, then flags with
  // instance before non-instance). The visitor returns false to stop.
  void enumerate(const SearchSpec& spec, const std::function<bool(const AnswerSet&)>& visit);
  // Least fixpoint for a total guess; nullopt when rejected. A seed randomizes rule order.
  std::optional<AnswerSet> saturate(const Guess& guess,
                                    std::optional<uint64_t> shuffle_seed = std::nullopt) const;

 private:
  struct Search;
  std::shared_ptr<const detail::Compiled> prog_;
  std::shared_ptr<Budget> budget_;
  SearchStats stats_;
};

std::vector<AnswerSet> enumerate_answer_sets(const ProgramFacts& facts, Limits limits = {},
                                             size_t max_count = SIZE_MAX);

}  // namespace typik
