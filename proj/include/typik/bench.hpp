#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "typik/engine.hpp"
#include "typik/kb.hpp"

namespace typik {

std::string primed(const std::string& name, int times);

// Adds copies 1..k-1 of the ABox with every individual primed once per copy.
KnowledgeBase replicate_abox(const KnowledgeBase& kb, int k);
// Adds copies 1..k-1 of the whole KB with every concept, role and individual name primed.
KnowledgeBase replicate_kb(const KnowledgeBase& kb, int k);

enum class BenchDimension { ABox, KB };
std::string row_label(BenchDimension d);

struct BenchCell {
  int multiplier;
  std::optional<double> seconds;  // empty when the budget ran out
  size_t queries = 0;
  size_t entailed = 0;
};

struct BenchRow {
  BenchDimension dimension;
  std::vector<BenchCell> cells;
};

struct BenchTable {
  std::vector<int> multipliers;
  std::vector<BenchRow> rows;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Times the tmin-abox pipeline (both fronts plus every query) on each replicated KB.
BenchTable run_bench(const KnowledgeBase& kb, const std::vector<Query>& queries,
                     const std::vector<BenchDimension>& dimensions,
                     const std::vector<int>& multipliers, Limits per_cell);

}  // namespace typik
