#pragma once

#include <utility>
#include <vector>

#include "buchi/automata.hpp"

namespace buchi::automata::detail {

/// A letter admitted by the canonical-word analysis, with whether it counts
/// as a non-padding symbol (a canonical word may not end in padding).
struct CountedLetter {
  Letter letter;
  bool nonzero;
};

/// For every state q: whether infinitely many distinct canonical words over
/// `letters` lead from q to acceptance. A canonical word is empty or ends in
/// a nonzero letter, so distinct words denote distinct tuples.
std::vector<bool> infinitely_many_from(const Dfa& a, const std::vector<CountedLetter>& letters);

/// Strongly connected component id for each node of an adjacency-list graph.
std::vector<std::uint32_t> scc_ids(const std::vector<std::vector<std::uint32_t>>& graph);

}  // namespace buchi::automata::detail
