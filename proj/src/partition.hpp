#pragma once

#include "autoseq/automaton.hpp"

#include <vector>

namespace autoseq::detail {

/// Coarsest partition of the states of a complete deterministic transition
/// table that refines `initial_class` and is compatible with `delta`.
/// Returns a class index per state.
std::vector<int> refine_partition(std::size_t num_states, std::size_t alphabet,
                                  const std::vector<State>& delta, const std::vector<int>& initial_class);

/// States reachable from `initial`, in breadth-first discovery order over
/// ascending letters.
std::vector<State> bfs_order(std::size_t num_states, std::size_t alphabet,
                             const std::vector<State>& delta, State initial);

}  // namespace autoseq::detail
