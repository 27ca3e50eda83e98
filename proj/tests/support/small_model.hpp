#pragma once

#include <cstdint>
#include <optional>

#include "typik/kb.hpp"
#include "typik/model.hpp"

namespace typik::testing {

struct SmallModelStats {
  uint64_t rank_assignments = 0;
  uint64_t sat_calls = 0;
};

// Exhaustive search for a ranked model of kb with 1..max_domain elements and ranks in
// [0, max_rank]. Ranks and the naming of individuals are enumerated up to symmetry;
// concept and role extensions are left to a propositional solver.
std::optional<RankedModel> find_small_model(const KnowledgeBase& kb, int max_domain, int max_rank,
                                            SmallModelStats* stats = nullptr);

}  // namespace typik::testing
